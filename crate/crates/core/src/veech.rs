//! The action of `T` and `S` on origamis and Veech groups as stabilizers.
//!
//! Abelian pairs: `T(x,y) = (x, x∘y)`, `S(x,y) = (y⁻¹, x)`. General origamis are acted on
//! through their double cover `(X, Y, n)`: the abelian action is applied to `(X, Y)` and the
//! deck involution is carried along (`n ↦ X∘n` under `T`, `X⁻¹∘n` under `T⁻¹`, unchanged
//! under `S^±1`), then the quotient is taken again.

use crate::error::{Error, Result};
use crate::origami::{canonical_code, canonical_form, double_cover, from_xye, theta_inverse, to_xye, Origami, Sign, Xye};
use crate::perm::{min_orbit_code, Perm};
use crate::schreier::explore;
use crate::word::{matrix_to_word, GroupWord, Letter, Mat2, Mode};

pub fn act_abelian(g: Letter, x: &Perm, y: &Perm) -> (Perm, Perm) {
    match g {
        Letter::T => (x.clone(), x * y),
        Letter::TInv => (x.clone(), &x.inverse() * y),
        Letter::S => (y.inverse(), x.clone()),
        Letter::SInv => (y.clone(), x.inverse()),
    }
}

pub fn act(g: Letter, o: &Origami) -> Result<Origami> {
    let c = double_cover(o);
    let (x, y) = act_abelian(g, &c.x, &c.y);
    let n = match g {
        Letter::T => &c.x * &c.n,
        Letter::TInv => &c.x.inverse() * &c.n,
        Letter::S | Letter::SInv => c.n,
    };
    let image = theta_inverse(&x, &y, &n).map_err(|e| Error::NormalizationFailure(e.to_string()))?;
    if image.is_connected() != o.is_connected() {
        return Err(Error::NormalizationFailure("connectivity changed under the action".into()));
    }
    Ok(image)
}

/// Applies the letters of `w` in order.
pub fn act_word(w: &GroupWord, o: &Origami) -> Result<Origami> {
    let mut cur = o.clone();
    for &l in w.letters() {
        cur = act(l, &cur)?;
    }
    Ok(cur)
}

pub fn act_word_abelian(w: &GroupWord, x: &Perm, y: &Perm) -> (Perm, Perm) {
    let mut cur = (x.clone(), y.clone());
    for &l in w.letters() {
        cur = act_abelian(l, &cur.0, &cur.1);
    }
    cur
}

/// Key of the class of a transitive pair under simultaneous conjugation.
pub fn pair_code(x: &Perm, y: &Perm) -> Vec<usize> {
    let all: Vec<usize> = (0..x.degree()).collect();
    let mut code = min_orbit_code(&[x.clone(), y.clone()], &all).0;
    code.push(x.degree());
    code
}

#[derive(Clone, Debug)]
pub struct VeechResult {
    pub mode: Mode,
    pub index: usize,
    pub coset_reps: Vec<GroupWord>,
    pub stabilizer_gens: Vec<GroupWord>,
    /// Matrices of the stabilizer generators (defined up to sign in projective mode).
    pub stabilizer_matrices: Vec<Mat2>,
    /// Canonical origamis of the orbit, aligned with `coset_reps`.
    pub orbit: Vec<Origami>,
    /// In linear mode, the abelian pairs of the orbit.
    pub orbit_pairs: Vec<(Perm, Perm)>,
}

/// The abelian pair of an abelian origami.
pub fn abelian_pair(o: &Origami) -> Result<(Perm, Perm)> {
    let t = to_xye(o)?;
    if t.eps.contains(&Sign::Minus) {
        return Err(Error::NotAbelian);
    }
    Ok((t.x, t.y))
}

fn pair_origami(x: &Perm, y: &Perm) -> Result<Origami> {
    canonical_form(&from_xye(&Xye { x: x.clone(), y: y.clone(), eps: vec![Sign::Plus; x.degree()] })?)
}

pub fn orbit_stabilizer(o: &Origami, mode: Mode) -> Result<VeechResult> {
    if !o.is_connected() {
        return Err(Error::Disconnected);
    }
    match mode {
        Mode::Projective => {
            let sch = explore(canonical_form(o)?, canonical_code, act)?;
            let stabilizer_matrices = sch.stabilizer.iter().map(GroupWord::matrix).collect();
            Ok(VeechResult {
                mode,
                index: sch.points.len(),
                coset_reps: sch.words,
                stabilizer_gens: sch.stabilizer,
                stabilizer_matrices,
                orbit: sch.points,
                orbit_pairs: Vec::new(),
            })
        }
        Mode::Linear => {
            let base = abelian_pair(o)?;
            let sch = explore(
                base,
                |p| Ok(pair_code(&p.0, &p.1)),
                |l, p| Ok(act_abelian(l, &p.0, &p.1)),
            )?;
            let orbit = sch.points.iter().map(|(x, y)| pair_origami(x, y)).collect::<Result<_>>()?;
            let stabilizer_matrices = sch.stabilizer.iter().map(GroupWord::matrix).collect();
            Ok(VeechResult {
                mode,
                index: sch.points.len(),
                coset_reps: sch.words,
                stabilizer_gens: sch.stabilizer,
                stabilizer_matrices,
                orbit,
                orbit_pairs: sch.points,
            })
        }
    }
}

/// Whether the matrix `m` lies in the Veech group of `o`.
pub fn contains(o: &Origami, m: Mat2, mode: Mode) -> Result<bool> {
    if !o.is_connected() {
        return Err(Error::Disconnected);
    }
    let w = matrix_to_word(m, mode)?;
    match mode {
        Mode::Projective => Ok(canonical_code(&act_word(&w, o)?)? == canonical_code(o)?),
        Mode::Linear => {
            let (x, y) = abelian_pair(o)?;
            let (x2, y2) = act_word_abelian(&w, &x, &y);
            Ok(pair_code(&x2, &y2) == pair_code(&x, &y))
        }
    }
}
