//! Permutations of the plain index set `{1..d}` and the signed index set `{±1..±d}`.
//!
//! Internally everything is 0-based. A [`Perm`] acts on `0..degree`; a [`SPerm`] of degree `d`
//! wraps a `Perm` on `2d` points where `+λ` is stored at `2(λ-1)` and `-λ` at `2(λ-1)+1`, so
//! sign inversion is `i ^ 1`. Composition is `(p∘q)(i) = p(q(i))`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Validation(format!("not a bijection of {{1..{n}}}")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds a permutation from 0-based cycles; points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::Validation(format!(
                        "point {} outside {{1..{degree}}}",
                        a + 1
                    )));
                }
                if used[a] {
                    return Err(Error::Validation(format!("point {} repeated", a + 1)));
                }
                used[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Perm::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            out = &base * &out;
        }
        out
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut images = vec![0; self.degree()];
        for i in 0..self.degree() {
            images[g.images[i]] = g.images[self.images[i]];
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| self.images[j] == i)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i != j)
    }

    /// Disjoint cycles, each starting at its smallest point, sorted by that point.
    /// Fixed points appear as cycles of length one.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }
}

impl Mul<&Perm> for &Perm {
    type Output = Perm;

    /// `self ∘ rhs`. Panics on a degree mismatch; use [`Perm::compose`] for checked composition.
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "composing permutations of different degrees");
        Perm { images: rhs.images.iter().map(|&i| self.images[i]).collect() }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            let parts: Vec<String> = cycle.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Internal index of the signed label `v` (`+λ ↦ 2(λ-1)`, `-λ ↦ 2(λ-1)+1`).
pub fn signed_index(v: i64) -> usize {
    debug_assert!(v != 0);
    let a = v.unsigned_abs() as usize - 1;
    2 * a + usize::from(v < 0)
}

/// Signed label of the internal index `i`.
pub fn index_signed(i: usize) -> i64 {
    let a = (i / 2 + 1) as i64;
    if i.is_multiple_of(2) {
        a
    } else {
        -a
    }
}

pub fn format_signed(v: i64) -> String {
    if v > 0 {
        format!("+{v}")
    } else {
        format!("{v}")
    }
}

/// Bijection of `{±1..±d}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SPerm {
    perm: Perm,
}

impl SPerm {
    pub fn identity(d: usize) -> Self {
        SPerm { perm: Perm::identity(2 * d) }
    }

    /// The sign inversion `n: κ ↦ -κ`.
    pub fn sign_inversion(d: usize) -> Self {
        SPerm { perm: Perm { images: (0..2 * d).map(|i| i ^ 1).collect() } }
    }

    pub fn from_perm(perm: Perm) -> Result<Self> {
        if !perm.degree().is_multiple_of(2) {
            return Err(Error::Validation("signed permutation needs an even number of points".into()));
        }
        Ok(SPerm { perm })
    }

    /// Builds `κ ↦ f(κ)` on `{±1..±d}`.
    pub fn from_fn(d: usize, f: impl Fn(i64) -> i64) -> Result<Self> {
        let mut images = Vec::with_capacity(2 * d);
        for i in 0..2 * d {
            let v = f(index_signed(i));
            if v == 0 || v.unsigned_abs() as usize > d {
                return Err(Error::Validation(format!("label {v} outside ±1..±{d}")));
            }
            images.push(signed_index(v));
        }
        Ok(SPerm { perm: Perm::from_images(images)? })
    }

    /// Builds from signed cycles; labels not mentioned are fixed.
    pub fn from_cycles(d: usize, cycles: &[Vec<i64>]) -> Result<Self> {
        let mut idx = Vec::with_capacity(cycles.len());
        for c in cycles {
            let mut v = Vec::with_capacity(c.len());
            for &s in c {
                if s == 0 || s.unsigned_abs() as usize > d {
                    return Err(Error::Validation(format!("label {s} outside ±1..±{d}")));
                }
                v.push(signed_index(s));
            }
            idx.push(v);
        }
        Ok(SPerm { perm: Perm::from_cycles(2 * d, &idx)? })
    }

    pub fn degree(&self) -> usize {
        self.perm.degree() / 2
    }

    pub fn as_perm(&self) -> &Perm {
        &self.perm
    }

    pub fn into_perm(self) -> Perm {
        self.perm
    }

    /// Image of the signed label `v`.
    pub fn apply(&self, v: i64) -> i64 {
        index_signed(self.perm.apply(signed_index(v)))
    }

    pub fn compose(&self, other: &SPerm) -> Result<SPerm> {
        Ok(SPerm { perm: self.perm.compose(&other.perm)? })
    }

    pub fn inverse(&self) -> SPerm {
        SPerm { perm: self.perm.inverse() }
    }

    pub fn conjugate_by(&self, g: &SPerm) -> SPerm {
        SPerm { perm: self.perm.conjugate_by(&g.perm) }
    }

    /// `f(-κ) = -f(κ)` for every `κ`.
    pub fn is_odd(&self) -> bool {
        (0..self.perm.degree()).all(|i| self.perm.apply(i ^ 1) == self.perm.apply(i) ^ 1)
    }

    pub fn is_sign_preserving(&self) -> bool {
        (0..self.perm.degree()).step_by(2).all(|i| self.perm.apply(i).is_multiple_of(2))
    }

    pub fn is_involution(&self) -> bool {
        self.perm.is_involution()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.perm.is_fixed_point_free()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    /// Cycles in signed labels, ordered by the internal order `+1 < -1 < +2 < -2 < …`.
    pub fn cycles(&self) -> Vec<Vec<i64>> {
        self.perm
            .cycles()
            .into_iter()
            .map(|c| c.into_iter().map(index_signed).collect())
            .collect()
    }
}

impl Mul<&SPerm> for &SPerm {
    type Output = SPerm;

    fn mul(self, rhs: &SPerm) -> SPerm {
        SPerm { perm: &self.perm * &rhs.perm }
    }
}

impl fmt::Display for SPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            let parts: Vec<String> = cycle.iter().map(|&v| format_signed(v)).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Orbits of `⟨gens⟩` on `0..degree`, each sorted, ordered by smallest point.
pub fn orbits(gens: &[Perm], degree: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            k += 1;
            for g in gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// True iff `⟨gens⟩` has a single orbit on `0..degree`.
pub fn is_transitive(gens: &[Perm], degree: usize) -> bool {
    if gens.iter().any(|g| g.degree() != degree) {
        return false;
    }
    degree <= 1 || orbits(gens, degree).len() == 1
}

/// Signed variant: transitivity on `{±1..±d}`.
pub fn is_transitive_signed(gens: &[SPerm], d: usize) -> bool {
    let plain: Vec<Perm> = gens.iter().map(|g| g.perm.clone()).collect();
    is_transitive(&plain, 2 * d)
}

/// BFS labeling code of the orbit of `start` under `gens`. Two starting points of (possibly
/// different) actions have equal codes iff there is an equivariant bijection of their orbits
/// mapping one start to the other.
pub fn orbit_code(gens: &[Perm], start: usize) -> Vec<usize> {
    let n = gens.first().map_or(start + 1, Perm::degree);
    let mut label = vec![usize::MAX; n];
    let mut order = vec![start];
    label[start] = 0;
    let mut code = Vec::new();
    let mut k = 0;
    while k < order.len() {
        let p = order[k];
        k += 1;
        for g in gens {
            let q = g.apply(p);
            if label[q] == usize::MAX {
                label[q] = order.len();
                order.push(q);
            }
            code.push(label[q]);
        }
    }
    code
}

/// Minimal [`orbit_code`] over all points of `orbit`, with a start point attaining it.
pub fn min_orbit_code(gens: &[Perm], orbit: &[usize]) -> (Vec<usize>, usize) {
    let mut best: Option<(Vec<usize>, usize)> = None;
    for &s in orbit {
        let c = orbit_code(gens, s);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, s));
        }
    }
    best.expect("orbit is non-empty")
}

/// Tries to extend `b ↦ c` to a map `φ` with `φ(src_i(p)) = dst_i(φ(p))` on the orbit of `b`.
/// Returns the pairs `(p, φ(p))` in BFS order when consistent and injective.
fn equivariant_map(src: &[Perm], dst: &[Perm], b: usize, c: usize) -> Option<Vec<(usize, usize)>> {
    let n = src.first().map_or(b + 1, Perm::degree);
    let m = dst.first().map_or(c + 1, Perm::degree);
    let mut phi = vec![usize::MAX; n];
    let mut hit = vec![false; m];
    phi[b] = c;
    hit[c] = true;
    let mut queue = VecDeque::from([b]);
    let mut pairs = vec![(b, c)];
    while let Some(p) = queue.pop_front() {
        for (g, h) in src.iter().zip(dst) {
            let q = g.apply(p);
            let image = h.apply(phi[p]);
            if phi[q] == usize::MAX {
                if hit[image] {
                    return None;
                }
                hit[image] = true;
                phi[q] = image;
                pairs.push((q, image));
                queue.push_back(q);
            } else if phi[q] != image {
                return None;
            }
        }
    }
    Some(pairs)
}

struct OrbitData {
    points: Vec<usize>,
    base: usize,
    code: Vec<usize>,
}

fn orbit_data(gens: &[Perm], degree: usize) -> Vec<OrbitData> {
    orbits(gens, degree)
        .into_iter()
        .map(|points| {
            let (code, base) = min_orbit_code(gens, &points);
            OrbitData { points, base, code }
        })
        .collect()
}

/// Generators of the centralizer of `gens` in the full symmetric group on `0..degree`.
///
/// Elements of the centralizer permute the orbits of `⟨gens⟩`, sending each orbit to an
/// isomorphic one. The output consists of the automorphisms of each single orbit (identity
/// elsewhere) followed by swaps of consecutive isomorphic orbits.
pub fn centralizer(gens: &[Perm], degree: usize) -> Vec<Perm> {
    let data = orbit_data(gens, degree);
    let mut out = Vec::new();
    for o in &data {
        for &c in &o.points {
            if c == o.base {
                continue;
            }
            if let Some(pairs) = equivariant_map(gens, gens, o.base, c) {
                let mut images: Vec<usize> = (0..degree).collect();
                for (p, q) in pairs {
                    images[p] = q;
                }
                out.push(Perm::from_images_unchecked(images));
            }
        }
    }
    for (i, o) in data.iter().enumerate() {
        // The next orbit with the same type, if any.
        let Some(next) = data[i + 1..].iter().find(|p| p.code == o.code) else {
            continue;
        };
        let pairs = equivariant_map(gens, gens, o.base, next.base)
            .expect("orbits with equal codes are isomorphic at their bases");
        let mut images: Vec<usize> = (0..degree).collect();
        for (p, q) in pairs {
            images[p] = q;
            images[q] = p;
        }
        out.push(Perm::from_images_unchecked(images));
    }
    out
}

/// Order of the centralizer of `gens` in the full symmetric group, from the orbit structure:
/// the product over isomorphism classes of `|Aut(orbit)|^k · k!`.
pub fn centralizer_order(gens: &[Perm], degree: usize) -> BigUint {
    let data = orbit_data(gens, degree);
    let mut classes: Vec<(&Vec<usize>, usize, usize)> = Vec::new();
    for o in &data {
        if let Some(entry) = classes.iter_mut().find(|(code, _, _)| **code == o.code) {
            entry.2 += 1;
            continue;
        }
        let local = o
            .points
            .iter()
            .filter(|&&c| equivariant_map(gens, gens, o.base, c).is_some())
            .count();
        classes.push((&o.code, local, 1));
    }
    let mut order = BigUint::one();
    for (_, local, k) in classes {
        for j in 1..=k {
            order *= BigUint::from(local) * BigUint::from(j);
        }
    }
    order
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// All bijections of `{±1..±d}`.
    Full,
    /// The odd permutations `S̄_d`.
    Odd,
}

/// Centralizer of signed permutations in the chosen ambient group. Odd permutations are
/// exactly those commuting with sign inversion, so the odd case adds `n` to the generators.
pub fn centralizer_signed(gens: &[SPerm], d: usize, ambient: Ambient) -> Vec<SPerm> {
    let mut plain: Vec<Perm> = gens.iter().map(|g| g.perm.clone()).collect();
    if ambient == Ambient::Odd {
        plain.push(SPerm::sign_inversion(d).perm);
    }
    centralizer(&plain, 2 * d).into_iter().map(|perm| SPerm { perm }).collect()
}

pub fn centralizer_order_signed(gens: &[SPerm], d: usize, ambient: Ambient) -> BigUint {
    let mut plain: Vec<Perm> = gens.iter().map(|g| g.perm.clone()).collect();
    if ambient == Ambient::Odd {
        plain.push(SPerm::sign_inversion(d).perm);
    }
    centralizer_order(&plain, 2 * d)
}

/// Finds `τ` with `τ∘a_i∘τ⁻¹ = b_i` for all `i`.
///
/// For a transitive tuple the candidates for the image of point 0 are tried in order and the
/// first consistent propagation wins. Otherwise orbits are paired by isomorphism type.
pub fn simultaneous_conjugacy(a: &[Perm], b: &[Perm], degree: usize) -> Option<Perm> {
    if a.len() != b.len()
        || a.iter().chain(b).any(|p| p.degree() != degree)
    {
        return None;
    }
    if degree == 0 {
        return Some(Perm::identity(0));
    }
    if is_transitive(a, degree) {
        return conjugators(a, b, degree).next();
    }
    let da = orbit_data(a, degree);
    let db = orbit_data(b, degree);
    if da.len() != db.len() {
        return None;
    }
    let mut used = vec![false; db.len()];
    let mut images = vec![usize::MAX; degree];
    for o in &da {
        let j = (0..db.len()).find(|&j| !used[j] && db[j].code == o.code)?;
        used[j] = true;
        let pairs = equivariant_map(a, b, o.base, db[j].base)?;
        for (p, q) in pairs {
            images[p] = q;
        }
    }
    Some(Perm::from_images_unchecked(images))
}

/// All `τ` with `τ∘a_i∘τ⁻¹ = b_i`, for a transitive tuple `a`, ordered by the image of point 0.
pub fn conjugators<'a>(a: &'a [Perm], b: &'a [Perm], degree: usize) -> impl Iterator<Item = Perm> + 'a {
    (0..degree).filter_map(move |c| {
        let pairs = equivariant_map(a, b, 0, c)?;
        if pairs.len() != degree {
            return None;
        }
        let mut images = vec![0; degree];
        for (p, q) in pairs {
            images[p] = q;
        }
        Some(Perm::from_images_unchecked(images))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    Odd,
}

/// Signed variant of [`simultaneous_conjugacy`]; with [`Constraint::Odd`] the witness commutes
/// with sign inversion.
pub fn simultaneous_conjugacy_signed(
    a: &[SPerm],
    b: &[SPerm],
    constraint: Constraint,
) -> Option<SPerm> {
    let d = a.first().or(b.first()).map_or(0, SPerm::degree);
    let (pa, pb) = signed_tuples(a, b, d, constraint);
    simultaneous_conjugacy(&pa, &pb, 2 * d).map(|perm| SPerm { perm })
}

/// All witnesses of [`simultaneous_conjugacy_signed`]; requires the tuple `a` (with `n` when
/// constrained) to be transitive.
pub fn conjugators_signed(a: &[SPerm], b: &[SPerm], constraint: Constraint) -> Vec<SPerm> {
    let d = a.first().or(b.first()).map_or(0, SPerm::degree);
    let (pa, pb) = signed_tuples(a, b, d, constraint);
    if pa.len() != pb.len() || !is_transitive(&pa, 2 * d) || pb.iter().any(|p| p.degree() != 2 * d) {
        return Vec::new();
    }
    conjugators(&pa, &pb, 2 * d).map(|perm| SPerm { perm }).collect()
}

fn signed_tuples(a: &[SPerm], b: &[SPerm], d: usize, constraint: Constraint) -> (Vec<Perm>, Vec<Perm>) {
    let mut pa: Vec<Perm> = a.iter().map(|g| g.perm.clone()).collect();
    let mut pb: Vec<Perm> = b.iter().map(|g| g.perm.clone()).collect();
    if constraint == Constraint::Odd {
        let n = SPerm::sign_inversion(d).perm;
        pa.push(n.clone());
        pb.push(n);
    }
    (pa, pb)
}

/// All elements of `⟨gens⟩`, sorted; `None` if there are more than `limit`.
pub fn generate_group(gens: &[Perm], degree: usize, limit: usize) -> Option<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        let p = out[k].clone();
        k += 1;
        for g in gens {
            let q = g * &p;
            if seen.insert(q.clone()) {
                if out.len() >= limit {
                    return None;
                }
                out.push(q);
            }
        }
    }
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, cycles: &[&[usize]]) -> Perm {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|i| i - 1).collect()).collect();
        Perm::from_cycles(degree, &c).unwrap()
    }

    #[test]
    fn compose_follows_function_order() {
        let a = p(3, &[&[1, 2]]);
        let b = p(3, &[&[2, 3]]);
        assert_eq!(a.compose(&b).unwrap(), p(3, &[&[1, 2, 3]]));
        assert_eq!(Perm::identity(3).compose(&b).unwrap(), b);
        assert!(matches!(a.compose(&Perm::identity(2)), Err(Error::DegreeMismatch(3, 2))));
    }

    #[test]
    fn cycles_include_fixed_points() {
        assert_eq!(p(4, &[&[1, 2, 3]]).cycles(), vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(Perm::identity(3).cycles(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(SPerm::sign_inversion(2).cycles(), vec![vec![1, -1], vec![2, -2]]);
        assert_eq!(p(4, &[&[1, 2, 3]]).to_string(), "(1 2 3)(4)");
    }

    #[test]
    fn signed_involution_squares_to_identity() {
        let m = SPerm::from_cycles(1, &[vec![1, -1]]).unwrap();
        assert!((&m * &m).is_identity());
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&[p(3, &[&[1, 2]]), p(3, &[&[2, 3]])], 3));
        assert!(!is_transitive(&[Perm::identity(2)], 2));
        let mu = SPerm::from_cycles(2, &[vec![1, -1], vec![2, -2]]).unwrap();
        assert!(!is_transitive_signed(&[mu, SPerm::sign_inversion(2)], 2));
    }

    #[test]
    fn centralizer_of_nothing_is_everything() {
        let gens = centralizer_signed(&[], 1, Ambient::Full);
        assert_eq!(generate_group(&gens.iter().map(|g| g.as_perm().clone()).collect::<Vec<_>>(), 2, 100).unwrap().len(), 2);
        assert_eq!(centralizer_order_signed(&[], 3, Ambient::Full), BigUint::from(720u32));
    }

    #[test]
    fn centralizer_of_sign_inversion_is_the_odd_group() {
        for d in 1..=4 {
            let gens = centralizer_signed(&[SPerm::sign_inversion(d)], d, Ambient::Full);
            assert!(gens.iter().all(SPerm::is_odd));
            let plain: Vec<Perm> = gens.iter().map(|g| g.as_perm().clone()).collect();
            let all = generate_group(&plain, 2 * d, 10_000).unwrap();
            let expected: usize = (1..=d).map(|k| 2 * k).product();
            assert_eq!(all.len(), expected);
        }
    }

    #[test]
    fn conjugacy_examples() {
        let a = SPerm::from_cycles(1, &[vec![1, -1]]).unwrap();
        let w = simultaneous_conjugacy_signed(&[a.clone()], &[a], Constraint::None).unwrap();
        assert!(w.is_identity());
        let a = SPerm::from_cycles(2, &[vec![1, -2], vec![-1, 2]]).unwrap();
        let b = SPerm::from_cycles(2, &[vec![2, -1], vec![-2, 1]]).unwrap();
        let w = simultaneous_conjugacy_signed(&[a.clone()], &[b.clone()], Constraint::Odd).unwrap();
        assert!(w.is_odd());
        assert_eq!(a.conjugate_by(&w), b);
    }

    #[test]
    fn conjugacy_of_intransitive_tuples() {
        let a = [p(5, &[&[1, 2], &[3, 4, 5]])];
        let b = [p(5, &[&[1, 4, 2], &[3, 5]])];
        let w = simultaneous_conjugacy(&a, &b, 5).unwrap();
        assert_eq!(a[0].conjugate_by(&w), b[0]);
        assert!(simultaneous_conjugacy(&a, &[p(5, &[&[1, 2, 3, 4, 5]])], 5).is_none());
    }
}
