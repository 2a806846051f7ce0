//! Origamis as pairs `(μ, ν)` of fixed-point-free involutions on `{±1..±d}`.
//!
//! `+λ` is the right side of square `λ` for `μ` and its top side for `ν`; `-λ` is the left
//! (bottom) side. A glued pair with sign product `-1` is a translation, `+1` a half-turn.

mod canonical;

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{
    index_signed, is_transitive, orbits, signed_index, simultaneous_conjugacy_signed, Constraint,
    Perm, SPerm,
};

pub use canonical::{canonical_code, canonical_form, enumerate, enumerate_each, CanonicalCode};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Origami {
    mu: SPerm,
    nu: SPerm,
}

impl Origami {
    /// Validates and builds a connected origami.
    pub fn new(mu: SPerm, nu: SPerm) -> Result<Self> {
        let o = Self::new_allow_disconnected(mu, nu)?;
        if !o.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(o)
    }

    /// Like [`Origami::new`] but accepts several components.
    pub fn new_allow_disconnected(mu: SPerm, nu: SPerm) -> Result<Self> {
        if mu.degree() != nu.degree() {
            return Err(Error::DegreeMismatch(mu.degree(), nu.degree()));
        }
        if mu.degree() == 0 {
            return Err(Error::Validation("an origami needs at least one square".into()));
        }
        for (name, g) in [("mu", &mu), ("nu", &nu)] {
            if !g.is_involution() || !g.is_fixed_point_free() {
                return Err(Error::InvalidInvolution(format!(
                    "{name} must be a fixed-point-free involution"
                )));
            }
        }
        Ok(Origami { mu, nu })
    }

    /// The square torus.
    pub fn torus() -> Self {
        let g = SPerm::from_cycles(1, &[vec![1, -1]]).expect("valid");
        Origami { mu: g.clone(), nu: g }
    }

    pub fn degree(&self) -> usize {
        self.mu.degree()
    }

    pub fn mu(&self) -> &SPerm {
        &self.mu
    }

    pub fn nu(&self) -> &SPerm {
        &self.nu
    }

    pub fn is_connected(&self) -> bool {
        let d = self.degree();
        is_transitive(
            &[self.mu.as_perm().clone(), self.nu.as_perm().clone(), SPerm::sign_inversion(d).into_perm()],
            2 * d,
        )
    }

    /// All gluings are translations in some choice of square orientations, i.e. the double
    /// cover falls apart.
    pub fn is_abelian(&self) -> bool {
        double_cover(self).components().len() > self.components()
    }

    fn components(&self) -> usize {
        let d = self.degree();
        let gens = [self.mu.as_perm().clone(), self.nu.as_perm().clone(), SPerm::sign_inversion(d).into_perm()];
        orbits(&gens, 2 * d).len()
    }

    /// `(τμτ⁻¹, τντ⁻¹)` for an odd `τ`.
    pub fn relabel(&self, tau: &SPerm) -> Result<Origami> {
        if tau.degree() != self.degree() {
            return Err(Error::DegreeMismatch(tau.degree(), self.degree()));
        }
        if !tau.is_odd() {
            return Err(Error::Validation("relabeling must be odd".into()));
        }
        Ok(Origami { mu: self.mu.conjugate_by(tau), nu: self.nu.conjugate_by(tau) })
    }

    /// Gluings of the side `κ` under `μ` (horizontal) or `ν` (vertical) are translations iff
    /// the paired labels have opposite signs.
    pub fn is_translation(&self, dir: Dir, side: i64) -> bool {
        let g = match dir {
            Dir::Horizontal => &self.mu,
            Dir::Vertical => &self.nu,
        };
        side.signum() != g.apply(side).signum()
    }
}

impl fmt::Display for Origami {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu={}; nu={}", self.mu, self.nu)
    }
}

/// Gluing direction: horizontal neighbours are glued by `μ`, vertical ones by `ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Horizontal,
    Vertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn of(v: i64) -> Sign {
        if v > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An abelian origami `(x, y)` with some squares turned upside down (`eps = -`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Xye {
    pub x: Perm,
    pub y: Perm,
    pub eps: Vec<Sign>,
}

impl fmt::Display for Xye {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps: String = self.eps.iter().map(|s| if *s == Sign::Plus { '+' } else { '-' }).collect();
        write!(f, "x={}; y={}; eps={}", self.x, self.y, eps)
    }
}

/// Glues squares along `x` (right neighbours, always by translation) and `y`: the own top side
/// `eps(λ)·λ` of square `λ` meets the own bottom side `-eps(y(λ))·y(λ)` of `y(λ)`.
pub fn from_xye(t: &Xye) -> Result<Origami> {
    from_xye_allow_disconnected(t).and_then(|o| if o.is_connected() { Ok(o) } else { Err(Error::Disconnected) })
}

pub(crate) fn from_xye_allow_disconnected(t: &Xye) -> Result<Origami> {
    let d = t.x.degree();
    if t.y.degree() != d {
        return Err(Error::DegreeMismatch(d, t.y.degree()));
    }
    if t.eps.len() != d {
        return Err(Error::DegreeMismatch(d, t.eps.len()));
    }
    let mut mu = vec![0; 2 * d];
    let mut nu = vec![0; 2 * d];
    for l in 0..d {
        let lam = l as i64 + 1;
        let right = -(t.x.apply(l) as i64 + 1);
        mu[signed_index(lam)] = signed_index(right);
        mu[signed_index(right)] = signed_index(lam);
        let up = t.y.apply(l);
        let top = t.eps[l].value() * lam;
        let bottom = -t.eps[up].value() * (up as i64 + 1);
        nu[signed_index(top)] = signed_index(bottom);
        nu[signed_index(bottom)] = signed_index(top);
    }
    Origami::new_allow_disconnected(
        SPerm::from_perm(Perm::from_images_unchecked(mu))?,
        SPerm::from_perm(Perm::from_images_unchecked(nu))?,
    )
}

/// A section of [`from_xye`]: squares are reoriented so that horizontal gluings become
/// translations (and, where consistent, vertical ones too), then `x`, `y`, `eps` are read off.
pub fn to_xye(o: &Origami) -> Result<Xye> {
    if !o.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = o.degree();
    let s = orientation(o);
    let tau = SPerm::from_fn(d, |v| s[v.unsigned_abs() as usize - 1] * v)?;
    let mu = o.mu.conjugate_by(&tau);
    let nu = o.nu.conjugate_by(&tau);

    let mut x = vec![0; d];
    for l in 0..d {
        let r = mu.apply(l as i64 + 1);
        debug_assert!(r < 0);
        x[l] = r.unsigned_abs() as usize - 1;
    }
    let mut eps: Vec<Option<Sign>> = vec![None; d];
    for start in 0..d {
        if eps[start].is_some() {
            continue;
        }
        eps[start] = Some(Sign::Plus);
        let mut l = start;
        loop {
            let top = eps[l].expect("set").value() * (l as i64 + 1);
            let r = nu.apply(top);
            let k = r.unsigned_abs() as usize - 1;
            if eps[k].is_some() {
                break;
            }
            eps[k] = Some(Sign::of(-r));
            l = k;
        }
    }
    let eps: Vec<Sign> = eps.into_iter().map(|e| e.expect("every square visited")).collect();
    let y: Vec<usize> = (0..d)
        .map(|l| nu.apply(eps[l].value() * (l as i64 + 1)).unsigned_abs() as usize - 1)
        .collect();
    Ok(Xye { x: Perm::from_images(x)?, y: Perm::from_images(y)?, eps })
}

/// Orientation sign per square making every horizontal gluing a translation. Horizontal
/// cylinders are entered in BFS order from square 1; a new cylinder is oriented so that the
/// vertical gluing through which it is reached becomes a translation.
fn orientation(o: &Origami) -> Vec<i64> {
    let d = o.degree();
    let mut s = vec![0i64; d];
    let mut queue = std::collections::VecDeque::new();
    let enter = |start: usize, sign: i64, s: &mut Vec<i64>, queue: &mut std::collections::VecDeque<usize>| {
        let mut l = start;
        let mut sl = sign;
        loop {
            s[l] = sl;
            queue.push_back(l);
            let r = o.mu.apply(sl * (l as i64 + 1));
            let k = r.unsigned_abs() as usize - 1;
            if s[k] != 0 {
                break;
            }
            // the side r must be the left side of k in k's chart
            sl = -r.signum();
            l = k;
        }
    };
    enter(0, 1, &mut s, &mut queue);
    while let Some(l) = queue.pop_front() {
        let lam = l as i64 + 1;
        let top = o.nu.apply(s[l] * lam);
        let bottom = o.nu.apply(-s[l] * lam);
        for (r, want_top) in [(top, false), (bottom, true)] {
            let k = r.unsigned_abs() as usize - 1;
            if s[k] == 0 {
                let sign = if want_top { r.signum() } else { -r.signum() };
                enter(k, sign, &mut s, &mut queue);
            }
        }
    }
    s
}

/// The translation double cover: sheets `λ⁺, λ⁻` are identified with the labels `+λ, -λ`
/// (internal indices), `X` is the right neighbour, `Y` the top neighbour, `n` the deck involution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleCover {
    pub x: Perm,
    pub y: Perm,
    pub n: Perm,
}

impl DoubleCover {
    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    /// Orbits of `⟨X, Y⟩`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        orbits(&[self.x.clone(), self.y.clone()], self.degree())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `n∘X∘n = X⁻¹` and `n∘Y∘n = Y⁻¹`.
    pub fn is_anti_invariant(&self) -> bool {
        self.x.conjugate_by(&self.n) == self.x.inverse() && self.y.conjugate_by(&self.n) == self.y.inverse()
    }

    /// Each component as an abelian pair, points relabeled in increasing order.
    pub fn component_pairs(&self) -> Vec<(Perm, Perm)> {
        self.components()
            .into_iter()
            .map(|comp| {
                let mut pos = vec![usize::MAX; self.degree()];
                for (k, &p) in comp.iter().enumerate() {
                    pos[p] = k;
                }
                let restrict = |g: &Perm| {
                    Perm::from_images_unchecked(comp.iter().map(|&p| pos[g.apply(p)]).collect())
                };
                (restrict(&self.x), restrict(&self.y))
            })
            .collect()
    }
}

pub fn double_cover(o: &Origami) -> DoubleCover {
    let n = SPerm::sign_inversion(o.degree()).into_perm();
    DoubleCover {
        x: &n * o.mu.as_perm(),
        y: &n * o.nu.as_perm(),
        n,
    }
}

/// Quotient of an abelian pair by a deck involution: `μ = n∘X`, `ν = n∘Y`, squares are the
/// `n`-orbits ordered by their smaller point, which becomes the `+` label.
pub fn theta_inverse(x: &Perm, y: &Perm, n: &Perm) -> Result<Origami> {
    let m = x.degree();
    if y.degree() != m || n.degree() != m {
        return Err(Error::DegreeMismatch(m, if y.degree() != m { y.degree() } else { n.degree() }));
    }
    if !m.is_multiple_of(2) || !n.is_involution() || !n.is_fixed_point_free() {
        return Err(Error::InvalidInvolution("n must be a fixed-point-free involution".into()));
    }
    if x.conjugate_by(n) != x.inverse() || y.conjugate_by(n) != y.inverse() {
        return Err(Error::InvalidInvolution("n must invert X and Y".into()));
    }
    let mu = n * x;
    let nu = n * y;
    if !mu.is_fixed_point_free() || !nu.is_fixed_point_free() {
        return Err(Error::InvalidInvolution("n∘X and n∘Y must be fixed-point-free".into()));
    }
    let mut label = vec![0usize; m];
    let mut sq = 0;
    for p in 0..m {
        let q = n.apply(p);
        if p < q {
            label[p] = 2 * sq;
            label[q] = 2 * sq + 1;
            sq += 1;
        }
    }
    let transport = |g: &Perm| {
        let mut images = vec![0; m];
        for p in 0..m {
            images[label[p]] = label[g.apply(p)];
        }
        SPerm::from_perm(Perm::from_images_unchecked(images))
    };
    Origami::new_allow_disconnected(transport(&mu)?, transport(&nu)?)
}

/// A label of the monodromy domain: the horizontal or vertical copy of a signed side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonodromyLabel {
    pub side: i64,
    pub dir: Dir,
}

impl fmt::Display for MonodromyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.dir == Dir::Horizontal { "h" } else { "v" };
        write!(f, "{}_{tag}", crate::perm::format_signed(self.side))
    }
}

/// Pillowcase monodromy on `4d` labels: index `i < 2d` is `(index_signed(i))_h`, index
/// `2d + i` is `(index_signed(i))_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monodromy {
    pub iota: Perm,
    pub sigma: Perm,
}

impl Monodromy {
    pub fn label(&self, i: usize) -> MonodromyLabel {
        let half = self.iota.degree() / 2;
        if i < half {
            MonodromyLabel { side: index_signed(i), dir: Dir::Horizontal }
        } else {
            MonodromyLabel { side: index_signed(i - half), dir: Dir::Vertical }
        }
    }

    /// `ι∘σ`, whose cycles correspond to the corners of the squares.
    pub fn corner_permutation(&self) -> Perm {
        &self.iota * &self.sigma
    }
}

/// `ι(±λ_h) = ±λ_v`, `ι(±λ_v) = ∓λ_h`, `σ(±λ_h) = μ(±λ)_h`, `σ(±λ_v) = ν(±λ)_v`.
pub fn monodromy(o: &Origami) -> Monodromy {
    let m = 2 * o.degree();
    let mut iota = vec![0; 2 * m];
    let mut sigma = vec![0; 2 * m];
    for i in 0..m {
        iota[i] = m + i;
        iota[m + i] = i ^ 1;
        sigma[i] = o.mu.as_perm().apply(i);
        sigma[m + i] = m + o.nu.as_perm().apply(i);
    }
    Monodromy {
        iota: Perm::from_images_unchecked(iota),
        sigma: Perm::from_images_unchecked(sigma),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityProfile {
    /// Cone angle over `π` of every corner point, ascending.
    pub valency: Vec<usize>,
    /// Orders `m = k - 2` of the corner points with `m ≠ 0`, ascending.
    pub orders: Vec<i64>,
    pub genus: usize,
    pub poles: usize,
}

pub fn singularity_profile(o: &Origami) -> Result<SingularityProfile> {
    if !o.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut valency: Vec<usize> = monodromy(o)
        .corner_permutation()
        .cycles()
        .iter()
        .map(|c| {
            debug_assert!(c.len() % 2 == 0);
            c.len() / 2
        })
        .collect();
    valency.sort_unstable();
    let orders: Vec<i64> = valency.iter().map(|&k| k as i64 - 2).filter(|&m| m != 0).collect();
    let total: i64 = orders.iter().sum();
    debug_assert!((total + 4) % 4 == 0);
    let genus = ((total + 4) / 4) as usize;
    let poles = orders.iter().filter(|&&m| m == -1).count();
    Ok(SingularityProfile { valency, orders, genus, poles })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DessinEdge {
    pub square: usize,
    pub side: i64,
    pub dir: Dir,
    /// Index into the corresponding vertex list.
    pub vertex: usize,
}

/// Tripartite graph: squares, glued horizontal side pairs, glued vertical side pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dessin {
    pub squares: usize,
    pub h_vertices: Vec<(i64, i64)>,
    pub v_vertices: Vec<(i64, i64)>,
    pub edges: Vec<DessinEdge>,
}

impl Dessin {
    pub fn valency(&self, dir: Option<Dir>, vertex: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| match dir {
                None => e.square == vertex,
                Some(dd) => e.dir == dd && e.vertex == vertex,
            })
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.squares + self.h_vertices.len() + self.v_vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for e in &self.edges {
            let other = match e.dir {
                Dir::Horizontal => self.squares + e.vertex,
                Dir::Vertical => self.squares + self.h_vertices.len() + e.vertex,
            };
            let (a, b) = (find(&mut parent, e.square), find(&mut parent, other));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|i| find(&mut parent, i) == root)
    }
}

pub fn dessin(o: &Origami) -> Dessin {
    let d = o.degree();
    let pairs = |g: &SPerm| -> Vec<(i64, i64)> {
        g.cycles().into_iter().map(|c| (c[0], c[1])).collect()
    };
    let h_vertices = pairs(&o.mu);
    let v_vertices = pairs(&o.nu);
    let mut edges = Vec::with_capacity(4 * d);
    for l in 0..d {
        let lam = l as i64 + 1;
        for (dir, verts) in [(Dir::Horizontal, &h_vertices), (Dir::Vertical, &v_vertices)] {
            for side in [lam, -lam] {
                let vertex = verts.iter().position(|&(a, b)| a == side || b == side).expect("paired");
                edges.push(DessinEdge { square: l, side, dir, vertex });
            }
        }
    }
    Dessin { squares: d, h_vertices, v_vertices, edges }
}

/// An odd `τ` with `τμ₁τ⁻¹ = μ₂`, `τν₁τ⁻¹ = ν₂`, if one exists.
pub fn is_equivalent(a: &Origami, b: &Origami) -> Option<SPerm> {
    if a.degree() != b.degree() {
        return None;
    }
    simultaneous_conjugacy_signed(
        &[a.mu.clone(), a.nu.clone()],
        &[b.mu.clone(), b.nu.clone()],
        Constraint::Odd,
    )
}
