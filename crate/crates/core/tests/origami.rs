use std::collections::HashSet;

use origami::origami::{
    canonical_code, canonical_form, double_cover, enumerate, from_xye, is_equivalent, monodromy, singularity_profile,
    theta_inverse, to_xye,
};
use origami::text::parse_origami;
use origami::{Origami, Perm, SPerm, Sign, Xye};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn random_odd(rng: &mut StdRng, d: usize) -> SPerm {
    let mut p: Vec<usize> = (0..d).collect();
    p.shuffle(rng);
    let signs: Vec<bool> = (0..d).map(|_| rng.gen()).collect();
    SPerm::from_fn(d, |v| {
        let l = v.unsigned_abs() as usize - 1;
        let s = if signs[l] { -1 } else { 1 };
        s * v.signum() * (p[l] as i64 + 1)
    })
    .unwrap()
}

fn random_perm(rng: &mut StdRng, n: usize) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

fn random_origami(rng: &mut StdRng, d: usize) -> Origami {
    loop {
        let t = Xye {
            x: random_perm(rng, d),
            y: random_perm(rng, d),
            eps: (0..d).map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus }).collect(),
        };
        if let Ok(o) = from_xye(&t) {
            return o;
        }
    }
}

fn fpf_involutions(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![vec![]];
    }
    let first = points[0];
    let mut out = Vec::new();
    for k in 1..points.len() {
        let rest: Vec<usize> = points[1..].iter().copied().filter(|&p| p != points[k]).collect();
        for mut tail in fpf_involutions(&rest) {
            tail.push((first, points[k]));
            out.push(tail);
        }
    }
    out
}

fn involution(d: usize, pairs: &[(usize, usize)]) -> SPerm {
    let mut img: Vec<usize> = (0..2 * d).collect();
    for &(a, b) in pairs {
        img[a] = b;
        img[b] = a;
    }
    SPerm::from_perm(Perm::from_images(img).unwrap()).unwrap()
}

/// Classes of connected origamis found by pairwise equivalence tests over all pairs of
/// involutions, without the canonical code.
fn brute_force_count(d: usize) -> usize {
    let invs = fpf_involutions(&(0..2 * d).collect::<Vec<_>>());
    let mut reps: Vec<(Vec<usize>, Origami)> = Vec::new();
    for a in &invs {
        for b in &invs {
            let Ok(o) = Origami::new(involution(d, a), involution(d, b)) else { continue };
            let mut inv = singularity_profile(&o).unwrap().valency;
            inv.push(o.is_abelian() as usize);
            if !reps.iter().any(|(k, r)| *k == inv && is_equivalent(r, &o).is_some()) {
                reps.push((inv, o));
            }
        }
    }
    reps.len()
}

#[test]
fn enumeration_matches_pairwise_classification() {
    for d in 1..=3 {
        assert_eq!(enumerate(d).len(), brute_force_count(d), "degree {d}");
    }
}

/// Classes of transitive pairs in `S_d` under conjugation and the half-turn
/// `(x, y) -> (x⁻¹, y⁻¹)`, by minimizing over all conjugators.
fn abelian_classes(d: usize) -> usize {
    let mut all = vec![Vec::<usize>::new()];
    for _ in 0..d {
        all = all
            .into_iter()
            .flat_map(|p| {
                (0..d).filter(|i| !p.contains(i)).map(|i| [p.clone(), vec![i]].concat()).collect::<Vec<_>>()
            })
            .collect();
    }
    let perms: Vec<Perm> = all.into_iter().map(|v| Perm::from_images(v).unwrap()).collect();
    let mut seen = HashSet::new();
    for x in &perms {
        for y in &perms {
            if !origami::perm::is_transitive(&[x.clone(), y.clone()], d) {
                continue;
            }
            let (xi, yi) = (x.inverse(), y.inverse());
            let key = perms
                .iter()
                .flat_map(|g| {
                    [
                        (x.conjugate_by(g).images().to_vec(), y.conjugate_by(g).images().to_vec()),
                        (xi.conjugate_by(g).images().to_vec(), yi.conjugate_by(g).images().to_vec()),
                    ]
                })
                .min()
                .unwrap();
            seen.insert(key);
        }
    }
    seen.len()
}

#[test]
fn abelian_counts_match_conjugacy_classes() {
    for d in 1..=5 {
        let n = enumerate(d).iter().filter(|o| o.is_abelian()).count();
        assert_eq!(n, abelian_classes(d), "degree {d}");
    }
    assert_eq!(abelian_classes(4), 26);
    assert_eq!(abelian_classes(5), 91);
}

#[test]
fn enumeration_is_canonical_and_distinct() {
    for d in 1..=4 {
        let list = enumerate(d);
        let codes: Vec<_> = list.iter().map(|o| canonical_code(o).unwrap()).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        for o in &list {
            assert_eq!(&canonical_form(o).unwrap(), o);
        }
    }
    assert_eq!(enumerate(5).len(), 318);
}

#[test]
fn xye_and_double_cover_round_trips() {
    let mut rng = StdRng::seed_from_u64(1);
    let mut cases: Vec<Origami> = (1..=4).flat_map(enumerate).collect();
    for _ in 0..100 {
        let d = rng.gen_range(1..=6);
        cases.push(random_origami(&mut rng, d));
    }
    for o in &cases {
        let t = to_xye(o).unwrap();
        let back = from_xye(&t).unwrap();
        assert!(is_equivalent(o, &back).is_some(), "{o}");
        assert_eq!(to_xye(&back).unwrap(), t);
        let c = double_cover(o);
        assert!(c.is_anti_invariant());
        assert_eq!(&theta_inverse(&c.x, &c.y, &c.n).unwrap(), o);
        assert_eq!(o.is_abelian(), t.eps.iter().all(|&s| s == Sign::Plus), "{o}");
    }
}

#[test]
fn abelian_means_two_copies() {
    for d in 1..=4 {
        for o in enumerate(d) {
            let c = double_cover(&o);
            if o.is_abelian() {
                let t = to_xye(&o).unwrap();
                let pairs = c.component_pairs();
                assert_eq!(pairs.len(), 2);
                for (x, y) in pairs {
                    assert!(origami::perm::simultaneous_conjugacy(&[x, y], &[t.x.clone(), t.y.clone()], d).is_some());
                }
            } else {
                assert!(c.is_connected());
                assert_eq!(c.degree(), 2 * d);
            }
        }
    }
}

#[test]
fn singularity_bookkeeping() {
    for d in 1..=5 {
        for o in enumerate(d) {
            let p = singularity_profile(&o).unwrap();
            let total: i64 = p.orders.iter().sum();
            assert_eq!(total, 4 * p.genus as i64 - 4);
            assert!(monodromy(&o).corner_permutation().cycles().iter().all(|c| c.len() % 2 == 0));
            assert_eq!(p.valency.iter().sum::<usize>(), 2 * d);
        }
    }
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..60 {
        let d = rng.gen_range(1..=5);
        let a = random_origami(&mut rng, d);
        let b = a.relabel(&random_odd(&mut rng, d)).unwrap();
        let c = b.relabel(&random_odd(&mut rng, d)).unwrap();
        assert!(is_equivalent(&a, &a).is_some());
        let w = is_equivalent(&a, &b).expect("relabeled");
        assert_eq!(a.relabel(&w).unwrap(), b);
        assert!(is_equivalent(&b, &a).is_some());
        assert!(is_equivalent(&a, &c).is_some());
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&c).unwrap());
        let other = random_origami(&mut rng, d);
        assert_eq!(is_equivalent(&a, &other).is_some(), canonical_code(&a).unwrap() == canonical_code(&other).unwrap());
    }
}

#[test]
fn four_square_with_two_poles() {
    let o = parse_origami("x=(2 3 4);y=(1 2)(3 4);eps=+++-").unwrap();
    let p = singularity_profile(&o).unwrap();
    assert_eq!(p.valency, vec![1, 1, 3, 3]);
    assert_eq!(p.orders, vec![-1, -1, 1, 1]);
    assert_eq!(p.genus, 1);
    assert!(!o.is_abelian());
    assert!(parse_origami(&o.to_string()).unwrap() == o);
}

#[test]
fn malformed_input_is_rejected() {
    for s in ["mu=(+1 +1); nu=(+1 -1)", "x=(1 2", "x=(1 2);y=();eps=+", "x=();y=();eps=+*", "x=(1 a);y=();eps=++", "mu=(+1 -1); nu=(+1)"] {
        assert!(parse_origami(s).is_err(), "{s}");
    }
}
