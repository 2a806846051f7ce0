use std::collections::{HashSet, VecDeque};

use origami::moduli::{cylinder_moduli, ModuliList};
use origami::origami::{canonical_code, enumerate, is_equivalent};
use origami::perm::simultaneous_conjugacy;
use origami::text::parse_origami;
use origami::veech::{abelian_pair, act, act_abelian, act_word, act_word_abelian, contains, orbit_stabilizer};
use origami::{Dir, GroupWord, Letter, Mat2, Mode, Origami, Perm, SPerm};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const L: &str = "x=(1 2);y=(1 3);eps=+++";
const D: &str = "x=(1 2 3 4 5 6);y=(1 2 5 6 3 4);eps=-+-+-+";

fn word(s: &str) -> GroupWord {
    s.parse().unwrap()
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

fn all_perms(n: usize) -> Vec<Perm> {
    let mut all = vec![Vec::<usize>::new()];
    for _ in 0..n {
        all = all
            .into_iter()
            .flat_map(|p| (0..n).filter(|i| !p.contains(i)).map(|i| [p.clone(), vec![i]].concat()).collect::<Vec<_>>())
            .collect();
    }
    all.into_iter().map(|v| Perm::from_images(v).unwrap()).collect()
}

/// Orbit of the class of `(x, y)` under `T, S`, with classes keyed by minimizing over every
/// conjugator in `S_d`.
fn brute_force_linear_index(x: &Perm, y: &Perm) -> usize {
    let d = x.degree();
    let group = all_perms(d);
    let key = |p: &(Perm, Perm)| {
        group.iter().map(|g| (p.0.conjugate_by(g).images().to_vec(), p.1.conjugate_by(g).images().to_vec())).min().unwrap()
    };
    let mut seen = HashSet::from([key(&(x.clone(), y.clone()))]);
    let mut queue = VecDeque::from([(x.clone(), y.clone())]);
    while let Some((a, b)) = queue.pop_front() {
        let t = (a.clone(), &a * &b);
        let s = (b.inverse(), a.clone());
        for p in [t, s] {
            if seen.insert(key(&p)) {
                queue.push_back(p);
            }
        }
    }
    seen.len()
}

/// Projective orbit size by closing under `T` and `S` on canonical codes.
fn closure_index(o: &Origami) -> usize {
    let mut seen = HashSet::from([canonical_code(o).unwrap()]);
    let mut queue = VecDeque::from([o.clone()]);
    while let Some(p) = queue.pop_front() {
        for l in [Letter::T, Letter::S] {
            let q = act(l, &p).unwrap();
            if seen.insert(canonical_code(&q).unwrap()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

#[test]
fn l_origami_linear_index_matches_brute_force() {
    let l = parse_origami(L).unwrap();
    let (x, y) = abelian_pair(&l).unwrap();
    let r = orbit_stabilizer(&l, Mode::Linear).unwrap();
    assert_eq!(r.index, 3);
    assert_eq!(r.index, brute_force_linear_index(&x, &y));
}

#[test]
fn linear_indices_match_brute_force() {
    for d in 1..=4 {
        for o in enumerate(d).into_iter().filter(Origami::is_abelian) {
            let (x, y) = abelian_pair(&o).unwrap();
            assert_eq!(orbit_stabilizer(&o, Mode::Linear).unwrap().index, brute_force_linear_index(&x, &y), "{o}");
        }
    }
}

#[test]
fn projective_indices_match_closure() {
    for d in 1..=4 {
        for o in enumerate(d) {
            assert_eq!(orbit_stabilizer(&o, Mode::Projective).unwrap().index, closure_index(&o), "{o}");
        }
    }
}

#[test]
fn l_origami_membership() {
    let l = parse_origami(L).unwrap();
    assert!(contains(&l, Mat2::new(0, 1, -1, 0), Mode::Linear).unwrap());
    assert!(!contains(&l, Mat2::new(1, 1, 0, 1), Mode::Linear).unwrap());
    assert!(contains(&l, Mat2::new(1, 2, 0, 1), Mode::Linear).unwrap());
    assert!(contains(&l, Mat2::new(-1, 0, 0, -1), Mode::Linear).unwrap());
}

#[test]
fn d_has_full_veech_group() {
    let d = parse_origami(D).unwrap();
    let r = orbit_stabilizer(&d, Mode::Projective).unwrap();
    assert_eq!(r.index, 1);
    assert!(contains(&d, Mat2::new(2, 1, 1, 1), Mode::Projective).unwrap());
    assert_eq!(orbit_stabilizer(&Origami::torus(), Mode::Linear).unwrap().index, 1);
}

#[test]
fn projective_relations() {
    for d in 1..=4 {
        for o in enumerate(d) {
            let code = canonical_code(&o).unwrap();
            for w in ["SS", "STSTST", "Tt", "sS"] {
                assert_eq!(canonical_code(&act_word(&word(w), &o).unwrap()).unwrap(), code, "{w} on {o}");
            }
        }
    }
}

#[test]
fn linear_relations() {
    for d in 1..=4 {
        for o in enumerate(d).into_iter().filter(Origami::is_abelian) {
            let (x, y) = abelian_pair(&o).unwrap();
            let same = |w: &str, v: &str| {
                let a = act_word_abelian(&word(w), &x, &y);
                let b = act_word_abelian(&word(v), &x, &y);
                simultaneous_conjugacy(&[a.0, a.1], &[b.0, b.1], d).is_some()
            };
            assert!(same("SSSS", ""));
            assert!(same("STSTSTSTSTST", ""));
            assert!(same("SST", "TSS"));
        }
    }
}

#[test]
fn action_is_well_defined_on_classes() {
    let mut rng = StdRng::seed_from_u64(2);
    for d in 1..=4 {
        for o in enumerate(d) {
            let images: Vec<Origami> = Letter::ALL.iter().map(|&l| act(l, &o).unwrap()).collect();
            for _ in 0..50 {
                let r = o.relabel(&random_odd(&mut rng, d)).unwrap();
                for (l, img) in Letter::ALL.iter().zip(&images) {
                    assert!(is_equivalent(&act(*l, &r).unwrap(), img).is_some(), "{l:?} on {o}");
                }
            }
        }
    }
}

#[test]
fn group_action_axiom() {
    let mut rng = StdRng::seed_from_u64(4);
    let letters = Letter::ALL;
    for o in enumerate(4).iter().step_by(5) {
        for _ in 0..10 {
            let w1 = GroupWord::new((0..rng.gen_range(0..5)).map(|_| letters[rng.gen_range(0..4)]));
            let w2 = GroupWord::new((0..rng.gen_range(0..5)).map(|_| letters[rng.gen_range(0..4)]));
            let two_steps = act_word(&w2, &act_word(&w1, o).unwrap()).unwrap();
            let at_once = act_word(&w1.then(&w2), o).unwrap();
            assert_eq!(canonical_code(&two_steps).unwrap(), canonical_code(&at_once).unwrap());
        }
    }
}

#[test]
fn abelian_action_agrees_with_general_action() {
    for d in 1..=4 {
        for o in enumerate(d).into_iter().filter(Origami::is_abelian) {
            let (x, y) = abelian_pair(&o).unwrap();
            for l in Letter::ALL {
                let (x2, y2) = act_abelian(l, &x, &y);
                let via_pair = origami::origami::from_xye(&origami::Xye {
                    x: x2,
                    y: y2,
                    eps: vec![origami::Sign::Plus; d],
                })
                .unwrap();
                assert!(is_equivalent(&via_pair, &act(l, &o).unwrap()).is_some());
            }
        }
    }
}

#[test]
fn stabilizers_are_sound() {
    for d in 1..=4 {
        for o in enumerate(d) {
            for mode in [Mode::Projective, Mode::Linear] {
                if mode == Mode::Linear && !o.is_abelian() {
                    continue;
                }
                let r = orbit_stabilizer(&o, mode).unwrap();
                assert_eq!(r.coset_reps.len(), r.index);
                for (g, m) in r.stabilizer_gens.iter().zip(&r.stabilizer_matrices) {
                    assert_eq!(&g.matrix(), m);
                    assert!(contains(&o, *m, mode).unwrap(), "{g} for {o}");
                }
                let codes: HashSet<_> =
                    r.coset_reps.iter().map(|w| canonical_code(&act_word(w, &o).unwrap()).unwrap()).collect();
                if mode == Mode::Projective {
                    assert_eq!(codes.len(), r.index);
                }
            }
        }
    }
}

fn sorted(mut v: Vec<num_rational::BigRational>) -> Vec<num_rational::BigRational> {
    v.sort();
    v
}

#[test]
fn cylinder_moduli_under_t_and_s() {
    for d in 1..=4 {
        for o in enumerate(d) {
            let ones = ModuliList::ones(d);
            let h = sorted(cylinder_moduli(&o, &ones, Dir::Horizontal).unwrap());
            let v = sorted(cylinder_moduli(&o, &ones, Dir::Vertical).unwrap());
            let t = act(Letter::T, &o).unwrap();
            assert_eq!(sorted(cylinder_moduli(&t, &ones, Dir::Horizontal).unwrap()), h);
            let s = act(Letter::S, &o).unwrap();
            assert_eq!(sorted(cylinder_moduli(&s, &ones, Dir::Horizontal).unwrap()), v);
            assert_eq!(sorted(cylinder_moduli(&s, &ones, Dir::Vertical).unwrap()), h);
        }
    }
}

#[test]
fn disconnected_and_non_abelian_inputs_are_rejected() {
    let four_square = parse_origami("x=(2 3 4);y=(1 2)(3 4);eps=+++-").unwrap();
    assert!(matches!(orbit_stabilizer(&four_square, Mode::Linear), Err(origami::Error::NotAbelian)));
    assert!(matches!(contains(&four_square, Mat2::new(2, 0, 0, 1), Mode::Projective), Err(origami::Error::NotUnimodular(2))));
}
