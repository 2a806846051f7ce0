//! Compatible moduli lists: rectangles of modulus `M_λ = h_λ / w_λ` replacing the squares.
//!
//! Loops of the punctured surface are edge paths in the dual multigraph (one vertex per square,
//! one edge per glued side pair). A list is compatible iff `K(γ, M) = 1` on the chords of a
//! spanning tree.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::origami::{Dir, Origami};
use crate::perm::{centralizer_signed, conjugators_signed, Ambient, Constraint, SPerm};
use crate::word::Mat2;

/// Positive rationals, one per square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliList(Vec<BigRational>);

impl ModuliList {
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        if values.iter().any(|v| !v.is_positive()) {
            return Err(Error::Validation("moduli must be positive".into()));
        }
        Ok(ModuliList(values))
    }

    pub fn ones(d: usize) -> Self {
        ModuliList(vec![BigRational::one(); d])
    }

    pub fn values(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn squared(&self) -> Vec<BigRational> {
        self.0.iter().map(|v| v * v).collect()
    }
}

impl std::fmt::Display for ModuliList {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Leaving square `from` through its side `side` into square `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub from: usize,
    pub side: i64,
    pub dir: Dir,
    pub to: usize,
}

impl Crossing {
    fn through(o: &Origami, side: i64, dir: Dir) -> Crossing {
        let g = glue(o, dir);
        Crossing {
            from: side.unsigned_abs() as usize - 1,
            side,
            dir,
            to: g.apply(side).unsigned_abs() as usize - 1,
        }
    }

    pub fn reversed(&self, o: &Origami) -> Crossing {
        Crossing::through(o, glue(o, self.dir).apply(self.side), self.dir)
    }
}

fn glue(o: &Origami, dir: Dir) -> &SPerm {
    match dir {
        Dir::Horizontal => o.mu(),
        Dir::Vertical => o.nu(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopBasis {
    /// Tree edges oriented away from square 1, in BFS order.
    pub tree: Vec<Crossing>,
    pub chords: Vec<Crossing>,
    /// One closed path from square 1 per chord.
    pub loops: Vec<Vec<Crossing>>,
}

/// Glued side pairs of the dual multigraph: `μ`-pairs then `ν`-pairs, each by its first label
/// in the order `+1, -1, +2, …`.
fn dual_edges(o: &Origami) -> Vec<Crossing> {
    let mut edges = Vec::new();
    for dir in [Dir::Horizontal, Dir::Vertical] {
        for c in glue(o, dir).cycles() {
            edges.push(Crossing::through(o, c[0], dir));
        }
    }
    edges
}

pub fn loop_basis(o: &Origami) -> Result<LoopBasis> {
    if !o.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = o.degree();
    let edges = dual_edges(o);
    let mut in_tree = vec![false; edges.len()];
    let mut parent: Vec<Option<Crossing>> = vec![None; d];
    let mut visited = vec![false; d];
    let mut tree = Vec::new();
    visited[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for (k, e) in edges.iter().enumerate() {
            let step = if e.from == u && !visited[e.to] {
                *e
            } else if e.to == u && !visited[e.from] {
                e.reversed(o)
            } else {
                continue;
            };
            in_tree[k] = true;
            visited[step.to] = true;
            parent[step.to] = Some(step);
            tree.push(step);
            queue.push_back(step.to);
        }
    }
    let path_from_root = |v: usize| {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(c) = parent[cur] {
            path.push(c);
            cur = c.from;
        }
        path.reverse();
        path
    };
    let chords: Vec<Crossing> = edges.iter().zip(&in_tree).filter(|(_, t)| !**t).map(|(e, _)| *e).collect();
    let loops = chords
        .iter()
        .map(|c| {
            let mut path = path_from_root(c.from);
            path.push(*c);
            path.extend(path_from_root(c.to).iter().rev().map(|x| x.reversed(o)));
            path
        })
        .collect();
    Ok(LoopBasis { tree, chords, loops })
}

fn check_closed(o: &Origami, path: &[Crossing]) -> Result<()> {
    for (k, c) in path.iter().enumerate() {
        if c.side == 0 || c.side.unsigned_abs() as usize > o.degree() || *c != Crossing::through(o, c.side, c.dir) {
            return Err(Error::NotClosed(format!("crossing {k} is not a gluing of the origami")));
        }
        let next = &path[(k + 1) % path.len()];
        if c.to != next.from {
            return Err(Error::NotClosed(format!("crossing {k} ends where crossing {} does not start", k + 1)));
        }
    }
    Ok(())
}

/// `K(γ, M)`: a horizontal crossing `a → b` contributes `M_a/M_b`, a vertical one `M_b/M_a`.
pub fn k_eval(o: &Origami, path: &[Crossing], m: &ModuliList) -> Result<BigRational> {
    if m.len() != o.degree() {
        return Err(Error::DegreeMismatch(o.degree(), m.len()));
    }
    check_closed(o, path)?;
    let mut k = BigRational::one();
    for c in path {
        let (a, b) = (&m.0[c.from], &m.0[c.to]);
        match c.dir {
            Dir::Horizontal => k = k * a / b,
            Dir::Vertical => k = k * b / a,
        }
    }
    Ok(k)
}

/// Exponent of `M_λ` in `K(γ, ·)`.
pub fn exponent_row(d: usize, path: &[Crossing]) -> Vec<i64> {
    let mut row = vec![0i64; d];
    for c in path {
        let s = if c.dir == Dir::Horizontal { 1 } else { -1 };
        row[c.from] += s;
        row[c.to] -= s;
    }
    row
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliSystem {
    /// One row per chord loop, one column per square.
    pub a: Vec<Vec<i64>>,
    /// Primitive integer basis of `ker A` in exponent space.
    pub kernel: Vec<Vec<BigInt>>,
    /// Generators of the automorphism group (odd centralizer of `μ, ν`).
    pub automorphisms: Vec<SPerm>,
}

pub fn moduli_system(o: &Origami) -> Result<ModuliSystem> {
    let basis = loop_basis(o)?;
    let d = o.degree();
    let a: Vec<Vec<i64>> = basis.loops.iter().map(|l| exponent_row(d, l)).collect();
    let big: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let kernel = linalg::nullspace(&big, d);
    let automorphisms = centralizer_signed(&[o.mu().clone(), o.nu().clone()], d, Ambient::Odd);
    Ok(ModuliSystem { a, kernel, automorphisms })
}

/// Moves coordinate `λ` to `|g(λ)|`.
pub fn permute_coordinates<T: Clone>(v: &[T], g: &SPerm) -> Vec<T> {
    let mut out = v.to_vec();
    for (l, x) in v.iter().enumerate() {
        out[g.apply(l as i64 + 1).unsigned_abs() as usize - 1] = x.clone();
    }
    out
}

pub fn is_compatible(o: &Origami, m: &ModuliList) -> Result<bool> {
    let basis = loop_basis(o)?;
    for l in &basis.loops {
        if !k_eval(o, l, m)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An ordered pair of directions, each a rational multiple of `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directions {
    pub theta1: BigRational,
    pub theta2: BigRational,
}

impl Default for Directions {
    fn default() -> Self {
        Directions { theta1: BigRational::zero(), theta2: BigRational::new(1.into(), 2.into()) }
    }
}

impl Directions {
    pub fn new(theta1: BigRational, theta2: BigRational) -> Result<Self> {
        let diff = &theta1 - &theta2;
        if diff.is_integer() {
            return Err(Error::Validation("the two directions must differ".into()));
        }
        Ok(Directions { theta1, theta2 })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryRealization {
    pub w: Vec<BigRational>,
    pub h: Vec<BigRational>,
    /// Squares of each horizontal cylinder, ordered by smallest square.
    pub horizontal: Vec<Vec<usize>>,
    pub vertical: Vec<Vec<usize>>,
    pub dirs: Directions,
    pub area: BigRational,
}

fn cylinders(o: &Origami, dir: Dir) -> Vec<Vec<usize>> {
    let d = o.degree();
    let g = glue(o, dir);
    let mut seen = vec![false; d];
    let mut out = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut cyl = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(l) = stack.pop() {
            cyl.push(l);
            let lam = l as i64 + 1;
            for side in [lam, -lam] {
                let k = g.apply(side).unsigned_abs() as usize - 1;
                if !seen[k] {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
        cyl.sort_unstable();
        out.push(cyl);
    }
    out
}

/// Widths and heights of the rectangles, normalized so that square 1 has height 1. Heights are
/// shared across horizontal gluings and widths across vertical ones.
pub fn realize_geometry(o: &Origami, m: &ModuliList, dirs: &Directions) -> Result<GeometryRealization> {
    let basis = loop_basis(o)?;
    let d = o.degree();
    if m.len() != d {
        return Err(Error::DegreeMismatch(d, m.len()));
    }
    let mut w = vec![BigRational::zero(); d];
    let mut h = vec![BigRational::zero(); d];
    h[0] = BigRational::one();
    w[0] = &h[0] / &m.0[0];
    for c in &basis.tree {
        match c.dir {
            Dir::Horizontal => {
                h[c.to] = h[c.from].clone();
                w[c.to] = &h[c.to] / &m.0[c.to];
            }
            Dir::Vertical => {
                w[c.to] = w[c.from].clone();
                h[c.to] = &m.0[c.to] * &w[c.to];
            }
        }
    }
    for c in &basis.chords {
        let ok = match c.dir {
            Dir::Horizontal => h[c.from] == h[c.to],
            Dir::Vertical => w[c.from] == w[c.to],
        };
        if !ok {
            return Err(Error::Incompatible);
        }
    }
    let area = w.iter().zip(&h).fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
    Ok(GeometryRealization {
        w,
        h,
        horizontal: cylinders(o, Dir::Horizontal),
        vertical: cylinders(o, Dir::Vertical),
        dirs: dirs.clone(),
        area,
    })
}

/// Moduli (height over circumference) of the cylinders in the given direction, ascending.
pub fn cylinder_moduli(o: &Origami, m: &ModuliList, dir: Dir) -> Result<Vec<BigRational>> {
    let g = realize_geometry(o, m, &Directions::default())?;
    let (cyls, across, along) = match dir {
        Dir::Horizontal => (&g.horizontal, &g.h, &g.w),
        Dir::Vertical => (&g.vertical, &g.w, &g.h),
    };
    let mut out: Vec<BigRational> = cyls
        .iter()
        .map(|c| {
            let circumference = c.iter().fold(BigRational::zero(), |acc, &l| acc + &along[l]);
            &across[c[0]] / circumference
        })
        .collect();
    out.sort();
    Ok(out)
}

fn t_norm_sq(a: [[f64; 2]; 2], theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let re = a[0][0] * c + a[1][0] * s;
    let im = a[0][1] * c + a[1][1] * s;
    re * re + im * im
}

/// `|T_A(e^{iθ₂})| / |T_A(e^{iθ₁})|` with `T_A(x+iy) = (ax+cy) + i(bx+dy)`; angles in radians.
pub fn rho(a: [[f64; 2]; 2], theta1: f64, theta2: f64) -> Result<f64> {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if det == 0.0 || !det.is_finite() {
        return Err(Error::SingularMatrix);
    }
    Ok((t_norm_sq(a, theta2) / t_norm_sq(a, theta1)).sqrt())
}

/// `(cos², sin², cos·sin)` of `kπ/4`.
fn quarter_trig(theta: &BigRational) -> Option<[BigRational; 3]> {
    let q = theta * BigRational::from_integer(4.into());
    if !q.is_integer() {
        return None;
    }
    let k = q.to_integer().mod_floor(&BigInt::from(8)).to_i64()?;
    let (z, h, one) = (BigRational::zero(), BigRational::new(1.into(), 2.into()), BigRational::one());
    Some(match k % 4 {
        0 => [one, z.clone(), z],
        1 => [h.clone(), h.clone(), h],
        2 => [z.clone(), one, z],
        _ => [h.clone(), h.clone(), -h],
    })
}

/// `ρ²` exactly, when both directions are multiples of `π/4`.
pub fn rho_squared_exact(a: Mat2, dirs: &Directions) -> Option<BigRational> {
    let norm = |theta: &BigRational| -> Option<BigRational> {
        let [c2, s2, cs] = quarter_trig(theta)?;
        let r = |x: i64| BigRational::from_integer(x.into());
        Some(
            r(a.a * a.a + a.b * a.b) * c2 + r(a.c * a.c + a.d * a.d) * s2
                + r(2 * (a.a * a.c + a.b * a.d)) * cs,
        )
    };
    let n1 = norm(&dirs.theta1)?;
    let n2 = norm(&dirs.theta2)?;
    if n1.is_zero() {
        return None;
    }
    Some(n2 / n1)
}

fn radians(theta: &BigRational) -> f64 {
    theta.to_f64().unwrap_or(0.0) * std::f64::consts::PI
}

/// The first odd `τ` (by image of `+1`) with `τμ₁τ⁻¹ = μ₂`, `τν₁τ⁻¹ = ν₂` and
/// `same(λ, |τ(λ)|)` for every square.
fn matching_witness(o1: &Origami, o2: &Origami, same: impl Fn(usize, usize) -> bool) -> Option<SPerm> {
    if o1.degree() != o2.degree() {
        return None;
    }
    conjugators_signed(
        &[o1.mu().clone(), o1.nu().clone()],
        &[o2.mu().clone(), o2.nu().clone()],
        Constraint::Odd,
    )
    .into_iter()
    .find(|tau| (0..o1.degree()).all(|l| same(l, tau.apply(l as i64 + 1).unsigned_abs() as usize - 1)))
}

fn require_compatible(o: &Origami, m: &ModuliList) -> Result<()> {
    if is_compatible(o, m)? {
        Ok(())
    } else {
        Err(Error::Incompatible)
    }
}

/// An odd `τ` relabeling `(O₁, M₁)` into `(O₂, M₂)` with `M₁_λ = M₂_{|τ(λ)|}`.
pub fn weighted_equivalent(p1: (&Origami, &ModuliList), p2: (&Origami, &ModuliList)) -> Result<Option<SPerm>> {
    require_compatible(p1.0, p1.1)?;
    require_compatible(p2.0, p2.1)?;
    Ok(matching_witness(p1.0, p2.0, |a, b| p1.1 .0[a] == p2.1 .0[b]))
}

/// Whether `(O, M)` is equivalent to `(O_A, ρ⁻¹·M_A)`.
pub fn affine_membership_condition(
    p: (&Origami, &ModuliList),
    pa: (&Origami, &ModuliList),
    a: Mat2,
    dirs: &Directions,
) -> Result<bool> {
    require_compatible(pa.0, pa.1)?;
    affine_membership_condition_squared(p, (pa.0, &pa.1.squared()), a, dirs)
}

/// As [`affine_membership_condition`], with the moduli of `P_A` given by their squares, so that
/// irrational `M_A` with rational squares can be tested exactly. Squares are compared
/// (`M_λ²·ρ² = M_A²`); exactly when `ρ²` is rational, otherwise with relative tolerance `1e-12`.
pub fn affine_membership_condition_squared(
    p: (&Origami, &ModuliList),
    pa: (&Origami, &[BigRational]),
    a: Mat2,
    dirs: &Directions,
) -> Result<bool> {
    if a.det() != 1 {
        return Err(Error::NotUnimodular(a.det()));
    }
    require_compatible(p.0, p.1)?;
    if pa.1.len() != pa.0.degree() || pa.1.iter().any(|v| !v.is_positive()) {
        return Err(Error::Validation("squared moduli must be positive, one per square".into()));
    }
    // K is multiplicative, so a list is compatible iff its square is
    require_compatible(pa.0, &ModuliList(pa.1.to_vec()))?;
    let lhs = p.1.squared();
    let found = match rho_squared_exact(a, dirs) {
        Some(r2) => matching_witness(p.0, pa.0, |x, y| &lhs[x] * &r2 == pa.1[y]),
        None => {
            let af = [[a.a as f64, a.b as f64], [a.c as f64, a.d as f64]];
            let r = rho(af, radians(&dirs.theta1), radians(&dirs.theta2))?;
            matching_witness(p.0, pa.0, |x, y| {
                let l = lhs[x].to_f64().unwrap_or(f64::NAN) * r * r;
                let rr = pa.1[y].to_f64().unwrap_or(f64::NAN);
                (l - rr).abs() <= 1e-12 * rr.abs().max(l.abs())
            })
        }
    };
    Ok(found.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_origami, parse_rationals};

    fn ml(s: &str) -> ModuliList {
        ModuliList::new(parse_rationals(s).unwrap()).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn torus_basics() {
        let t = Origami::torus();
        let b = loop_basis(&t).unwrap();
        assert_eq!(b.loops.len(), 2);
        let s = moduli_system(&t).unwrap();
        assert_eq!(s.kernel.len(), 1);
        let g = realize_geometry(&t, &ml("1"), &Directions::default()).unwrap();
        assert_eq!(g.area, BigRational::one());
        assert_eq!(cylinder_moduli(&t, &ml("1"), Dir::Horizontal).unwrap(), vec![BigRational::one()]);
    }

    #[test]
    fn two_square_torus() {
        let o = parse_origami("x=(1 2); y=(); eps=++").unwrap();
        assert_eq!(loop_basis(&o).unwrap().loops.len(), 3);
        assert_eq!(moduli_system(&o).unwrap().kernel.len(), 2);
        let g = realize_geometry(&o, &ml("2,3"), &Directions::default()).unwrap();
        assert_eq!(g.h, vec![q(1, 1), q(1, 1)]);
        assert_eq!(g.w, vec![q(1, 2), q(1, 3)]);
        assert_eq!(g.area, q(5, 6));
        assert_eq!(cylinder_moduli(&o, &ml("1,1"), Dir::Horizontal).unwrap(), vec![q(1, 2)]);
        assert_eq!(cylinder_moduli(&o, &ml("1,1"), Dir::Vertical).unwrap(), vec![q(1, 1), q(1, 1)]);
        assert!(weighted_equivalent((&o, &ml("2,3")), (&o, &ml("3,2"))).unwrap().is_some());
        assert!(weighted_equivalent((&o, &ml("2,3")), (&o, &ml("2,5"))).unwrap().is_none());
    }

    #[test]
    fn rho_values() {
        let i = [[1.0, 0.0], [0.0, 1.0]];
        let h = std::f64::consts::FRAC_PI_2;
        assert!((rho(i, 0.3, 1.1).unwrap() - 1.0).abs() < 1e-12);
        assert!((rho([[1.0, 1.0], [0.0, 1.0]], 0.0, h).unwrap() - 0.5f64.sqrt()).abs() < 1e-12);
        assert!((rho([[0.0, 1.0], [-1.0, 0.0]], 0.0, h).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(rho([[1.0, 2.0], [2.0, 4.0]], 0.0, h), Err(Error::SingularMatrix)));
        assert_eq!(rho_squared_exact(Mat2::new(1, 1, 0, 1), &Directions::default()), Some(q(1, 2)));
    }

    #[test]
    fn membership_examples() {
        let t = Origami::torus();
        let dirs = Directions::default();
        assert!(affine_membership_condition((&t, &ml("1")), (&t, &ml("1")), Mat2::identity(), &dirs).unwrap());
        // M_A = 1/√2, given through its square
        let sq = [q(1, 2)];
        assert!(affine_membership_condition_squared((&t, &ml("1")), (&t, &sq), Mat2::new(1, 1, 0, 1), &dirs).unwrap());
        let wrong = [q(1, 3)];
        assert!(!affine_membership_condition_squared((&t, &ml("1")), (&t, &wrong), Mat2::new(1, 1, 0, 1), &dirs).unwrap());
    }
}
