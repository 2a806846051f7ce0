//! Canonical relabeling and enumeration up to equivalence.
//!
//! The traversal code from a base label `b`: `b` becomes `+1` and `-b` becomes `-1`; labels are
//! then processed in the order `+1, -1, +2, -2, …` and for each the images under `μ` then `ν`
//! are recorded (as internal indices of the new labeling). An unseen image `t` receives the next
//! square, `t ↦ +k`, `-t ↦ -k`. The canonical code is the minimum over all `2d` bases.

use crate::error::{Error, Result};
use crate::perm::{Perm, SPerm};

use super::Origami;

/// Hashable key of an equivalence class; equal codes iff equivalent origamis.
pub type CanonicalCode = Vec<u32>;

/// Traversal code from `base`, abandoned (returning `None`) as soon as it exceeds `bound`.
fn code_from(o: &Origami, base: usize, bound: Option<&[u32]>) -> Option<Vec<u32>> {
    let m = 2 * o.degree();
    let gens = [o.mu().as_perm(), o.nu().as_perm()];
    let mut new_of = vec![u32::MAX; m];
    let mut old_of = vec![0usize; m];
    new_of[base] = 0;
    new_of[base ^ 1] = 1;
    old_of[0] = base;
    old_of[1] = base ^ 1;
    let mut next = 2u32;
    let mut code = Vec::with_capacity(2 * m);
    let mut smaller = false;
    for k in 0..m {
        if k as u32 >= next {
            // disconnected: the traversal cannot reach every label
            return None;
        }
        let old = old_of[k];
        for g in gens {
            let t = g.apply(old);
            if new_of[t] == u32::MAX {
                new_of[t] = next;
                new_of[t ^ 1] = next + 1;
                old_of[next as usize] = t;
                old_of[next as usize + 1] = t ^ 1;
                next += 2;
            }
            let v = new_of[t];
            if let (Some(b), false) = (bound, smaller) {
                let pos = code.len();
                if v > b[pos] {
                    return None;
                }
                if v < b[pos] {
                    smaller = true;
                }
            }
            code.push(v);
        }
    }
    Some(code)
}

pub fn canonical_code(o: &Origami) -> Result<CanonicalCode> {
    if !o.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = code_from(o, 0, None).expect("connected");
    for base in 1..2 * o.degree() {
        if let Some(c) = code_from(o, base, Some(&best)) {
            if c < best {
                best = c;
            }
        }
    }
    Ok(best)
}

fn decode(code: &[u32]) -> Origami {
    let m = code.len() / 2;
    let mu: Vec<usize> = (0..m).map(|k| code[2 * k] as usize).collect();
    let nu: Vec<usize> = (0..m).map(|k| code[2 * k + 1] as usize).collect();
    Origami::new_allow_disconnected(
        SPerm::from_perm(Perm::from_images_unchecked(mu)).expect("even"),
        SPerm::from_perm(Perm::from_images_unchecked(nu)).expect("even"),
    )
    .expect("codes decode to origamis")
}

/// The representative of the class of `o` whose traversal code from `+1` is minimal.
pub fn canonical_form(o: &Origami) -> Result<Origami> {
    canonical_code(o).map(|c| decode(&c))
}

/// All connected origamis of degree `d` up to equivalence, in increasing canonical code order.
pub fn enumerate(d: usize) -> Vec<Origami> {
    let mut out = Vec::new();
    enumerate_each(d, |o| out.push(o));
    out
}

/// Streaming form of [`enumerate`]: `f` is called once per class, in the same order.
///
/// Labeled origamis are generated directly in traversal normal form (every unseen image is the
/// next square), so each class is produced once per base attaining its canonical code and kept
/// only for the labeling that equals that code.
pub fn enumerate_each(d: usize, mut f: impl FnMut(Origami)) {
    if d == 0 {
        return;
    }
    let mut gen = Generator { m: 2 * d, g: [vec![usize::MAX; 2 * d], vec![usize::MAX; 2 * d]], used: 1 };
    gen.search(0, &mut f);
}

struct Generator {
    m: usize,
    /// `μ` and `ν` in the labeling being built.
    g: [Vec<usize>; 2],
    /// Squares introduced so far.
    used: usize,
}

impl Generator {
    /// Fills slot `pos` of the traversal (label `pos / 2`, generator `pos % 2`).
    fn search(&mut self, pos: usize, f: &mut impl FnMut(Origami)) {
        if pos == 2 * self.m {
            self.emit(f);
            return;
        }
        let (k, which) = (pos / 2, pos % 2);
        if k >= 2 * self.used {
            return;
        }
        if self.g[which][k] != usize::MAX {
            self.search(pos + 1, f);
            return;
        }
        let open: Vec<usize> =
            (0..2 * self.used).filter(|&t| t != k && self.g[which][t] == usize::MAX).collect();
        for t in open {
            self.g[which][k] = t;
            self.g[which][t] = k;
            self.search(pos + 1, f);
            self.g[which][k] = usize::MAX;
            self.g[which][t] = usize::MAX;
        }
        if 2 * self.used < self.m {
            let t = 2 * self.used;
            self.used += 1;
            self.g[which][k] = t;
            self.g[which][t] = k;
            self.search(pos + 1, f);
            self.g[which][k] = usize::MAX;
            self.g[which][t] = usize::MAX;
            self.used -= 1;
        }
    }

    fn emit(&self, f: &mut impl FnMut(Origami)) {
        let mu = SPerm::from_perm(Perm::from_images_unchecked(self.g[0].clone())).expect("even");
        let nu = SPerm::from_perm(Perm::from_images_unchecked(self.g[1].clone())).expect("even");
        let o = Origami::new_allow_disconnected(mu, nu).expect("fixed-point-free involutions");
        let own = code_from(&o, 0, None).expect("connected by construction");
        for base in 1..self.m {
            if let Some(c) = code_from(&o, base, Some(&own)) {
                if c < own {
                    return;
                }
            }
        }
        f(o);
    }
}
