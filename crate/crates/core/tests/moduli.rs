use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use origami::moduli::{
    is_compatible, k_eval, loop_basis, moduli_system, permute_coordinates, realize_geometry, rho, weighted_equivalent,
    Directions, ModuliList,
};
use origami::origami::enumerate;
use origami::text::parse_origami;
use origami::{Origami, SPerm};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn dot(row: &[i64], v: &[BigInt]) -> BigInt {
    row.iter().zip(v).map(|(&a, b)| BigInt::from(a) * b).sum()
}

fn in_kernel(a: &[Vec<i64>], v: &[BigInt]) -> bool {
    a.iter().all(|r| dot(r, v).is_zero())
}

/// Rank over `F_p` for a large prime, independent of the exact elimination.
fn rank_mod_p(a: &[Vec<i64>], ncols: usize) -> usize {
    const P: i64 = 1_000_000_007;
    let mut m: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| x.rem_euclid(P)).collect()).collect();
    let pow = |mut b: i64, mut e: i64| {
        let mut r = 1i64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        let inv = pow(m[rank][c], P - 2);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c] * inv % P;
                for j in 0..ncols {
                    m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `M_λ = 2^{e_λ} · 3^{f_λ}`.
fn list_from_exponents(e: &[BigInt], f: &[BigInt]) -> ModuliList {
    let pw = |b: i64, x: &BigInt| -> BigRational {
        let k: i64 = x.try_into().unwrap();
        let base = BigRational::from_integer(b.into());
        if k >= 0 {
            Pow::pow(base, k as u64)
        } else {
            BigRational::one() / Pow::pow(base, (-k) as u64)
        }
    };
    ModuliList::new(e.iter().zip(f).map(|(a, b)| pw(2, a) * pw(3, b)).collect()).unwrap()
}

fn combination(rng: &mut StdRng, basis: &[Vec<BigInt>], d: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d];
    for b in basis {
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        for (x, y) in v.iter_mut().zip(b) {
            *x += &c * y;
        }
    }
    v
}

#[test]
fn kernel_properties_and_compatibility_agree() {
    let mut rng = StdRng::seed_from_u64(7);
    for d in 1..=4 {
        for o in enumerate(d) {
            let s = moduli_system(&o).unwrap();
            assert_eq!(s.a.len(), d + 1);
            assert!(!s.kernel.is_empty());
            assert!(in_kernel(&s.a, &vec![BigInt::one(); d]));
            assert_eq!(s.kernel.len(), d - rank_mod_p(&s.a, d));
            for v in &s.kernel {
                assert!(in_kernel(&s.a, v));
            }
            for k in 0..100 {
                let mut e = combination(&mut rng, &s.kernel, d);
                let f = combination(&mut rng, &s.kernel, d);
                if k % 2 == 1 {
                    let i = rng.gen_range(0..d);
                    e[i] += BigInt::from(rng.gen_range(1i64..=2));
                }
                let m = list_from_exponents(&e, &f);
                let expected = in_kernel(&s.a, &e) && in_kernel(&s.a, &f);
                let compatible = is_compatible(&o, &m).unwrap();
                assert_eq!(compatible, expected, "{o} with {m}");
                assert_eq!(realize_geometry(&o, &m, &Directions::default()).is_ok(), compatible);
                if k % 2 == 0 {
                    assert!(compatible);
                }
            }
        }
    }
}

#[test]
fn automorphisms_preserve_the_kernel() {
    let mut rng = StdRng::seed_from_u64(12);
    for d in 1..=4 {
        for o in enumerate(d) {
            let s = moduli_system(&o).unwrap();
            for g in &s.automorphisms {
                for v in &s.kernel {
                    assert!(in_kernel(&s.a, &permute_coordinates(v, g)));
                }
                let e = combination(&mut rng, &s.kernel, d);
                let m = list_from_exponents(&e, &vec![BigInt::zero(); d]);
                let moved = ModuliList::new(permute_coordinates(m.values(), g)).unwrap();
                assert!(is_compatible(&o, &moved).unwrap());
            }
        }
    }
}

fn random_odd(rng: &mut StdRng, d: usize) -> SPerm {
    let mut p: Vec<usize> = (0..d).collect();
    p.shuffle(rng);
    let signs: Vec<bool> = (0..d).map(|_| rng.gen()).collect();
    SPerm::from_fn(d, |v| {
        let l = v.unsigned_abs() as usize - 1;
        (if signs[l] { -1 } else { 1 }) * v.signum() * (p[l] as i64 + 1)
    })
    .unwrap()
}

#[test]
fn kernels_follow_relabelings() {
    let mut rng = StdRng::seed_from_u64(13);
    for o in enumerate(4) {
        let tau = random_odd(&mut rng, 4);
        let r = o.relabel(&tau).unwrap();
        let (s, sr) = (moduli_system(&o).unwrap(), moduli_system(&r).unwrap());
        assert_eq!(s.kernel.len(), sr.kernel.len());
        for v in &s.kernel {
            assert!(in_kernel(&sr.a, &permute_coordinates(v, &tau)));
        }
        let e = combination(&mut rng, &s.kernel, 4);
        let m = list_from_exponents(&e, &e);
        let mr = ModuliList::new(permute_coordinates(m.values(), &tau)).unwrap();
        assert!(weighted_equivalent((&o, &m), (&r, &mr)).unwrap().is_some());
    }
}

#[test]
fn k_is_multiplicative_on_concatenated_loops() {
    let mut rng = StdRng::seed_from_u64(14);
    for o in enumerate(4) {
        let basis = loop_basis(&o).unwrap();
        for _ in 0..5 {
            let m = ModuliList::new((0..4).map(|_| q(rng.gen_range(1..6), rng.gen_range(1..6))).collect()).unwrap();
            for a in &basis.loops {
                for b in &basis.loops {
                    let ab: Vec<_> = a.iter().chain(b).copied().collect();
                    let lhs = k_eval(&o, &ab, &m).unwrap();
                    let rhs = k_eval(&o, a, &m).unwrap() * k_eval(&o, b, &m).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn open_paths_are_rejected() {
    let o = parse_origami("x=(1 2);y=();eps=++").unwrap();
    let basis = loop_basis(&o).unwrap();
    let path = &basis.tree[..1];
    assert!(matches!(k_eval(&o, path, &ModuliList::ones(2)), Err(origami::Error::NotClosed(_))));
}

#[test]
fn two_square_horizontal_torus() {
    let o = parse_origami("x=(1 2);y=();eps=++").unwrap();
    assert_eq!(moduli_system(&o).unwrap().kernel.len(), 2);
    let g = realize_geometry(&o, &ModuliList::new(vec![q(2, 1), q(3, 1)]).unwrap(), &Directions::default()).unwrap();
    assert_eq!(g.h, vec![q(1, 1), q(1, 1)]);
    assert_eq!(g.w, vec![q(1, 2), q(1, 3)]);
    assert_eq!(g.area, q(5, 6));
}

#[test]
fn geometry_is_consistent() {
    let mut rng = StdRng::seed_from_u64(15);
    for d in 1..=4 {
        for o in enumerate(d) {
            let s = moduli_system(&o).unwrap();
            let e = combination(&mut rng, &s.kernel, d);
            let m = list_from_exponents(&e, &vec![BigInt::zero(); d]);
            let g = realize_geometry(&o, &m, &Directions::default()).unwrap();
            let mut area = BigRational::zero();
            for l in 0..d {
                assert_eq!(&g.h[l] / &g.w[l], m.values()[l]);
                area += &g.h[l] * &g.w[l];
                let lam = l as i64 + 1;
                let right = o.mu().apply(lam).unsigned_abs() as usize - 1;
                let up = o.nu().apply(lam).unsigned_abs() as usize - 1;
                assert_eq!(g.h[l], g.h[right]);
                assert_eq!(g.w[l], g.w[up]);
            }
            assert_eq!(area, g.area);
        }
    }
}

#[test]
fn rho_examples() {
    let half_pi = std::f64::consts::FRAC_PI_2;
    assert_eq!(rho([[1.0, 0.0], [0.0, 1.0]], 0.3, 1.1).unwrap(), 1.0);
    assert!((rho([[1.0, 1.0], [0.0, 1.0]], 0.0, half_pi).unwrap() - 1.0 / 2f64.sqrt()).abs() < 1e-12);
    assert!((rho([[0.0, 1.0], [-1.0, 0.0]], 0.0, half_pi).unwrap() - 1.0).abs() < 1e-12);
    assert!(rho([[1.0, 2.0], [2.0, 4.0]], 0.0, half_pi).is_err());
}

proptest! {
    #[test]
    fn rho_of_identity_is_one(t1 in -3.0f64..3.0, t2 in -3.0f64..3.0) {
        prop_assert!((rho([[1.0, 0.0], [0.0, 1.0]], t1, t2).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn compatible_lists_scale(num in 1i64..20, den in 1i64..20, idx in 0usize..60) {
        let all: Vec<Origami> = enumerate(4);
        let o = &all[idx % all.len()];
        let m = ModuliList::new(vec![q(num, den); 4]).unwrap();
        prop_assert!(is_compatible(o, &m).unwrap());
    }
}
