//! Orbit exploration under the letters `T, S, t, s` with a Schreier transversal and
//! Reidemeister–Schreier generators of the stabilizer of the base point.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use crate::error::Result;
use crate::word::{GroupWord, Letter};

pub(crate) struct Schreier<P> {
    /// Orbit points in BFS order; `points[0]` is the base.
    pub points: Vec<P>,
    /// `words[i]` maps the base to `points[i]`.
    pub words: Vec<GroupWord>,
    pub stabilizer: Vec<GroupWord>,
}

pub(crate) fn explore<P, K: Eq + Hash>(
    base: P,
    key: impl Fn(&P) -> Result<K>,
    step: impl Fn(Letter, &P) -> Result<P>,
) -> Result<Schreier<P>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    index.insert(key(&base)?, 0);
    let mut points = vec![base];
    let mut words = vec![GroupWord::empty()];
    let mut stabilizer: Vec<GroupWord> = Vec::new();
    let mut seen: HashSet<GroupWord> = HashSet::new();
    let mut i = 0;
    while i < points.len() {
        for l in Letter::ALL {
            let q = step(l, &points[i])?;
            let k = key(&q)?;
            let via = words[i].then(&GroupWord::new([l]));
            match index.get(&k) {
                None => {
                    index.insert(k, points.len());
                    points.push(q);
                    words.push(via);
                }
                Some(&j) => {
                    let g = via.then(&words[j].inverse());
                    if !g.is_empty() && !seen.contains(&g) && !seen.contains(&g.inverse()) {
                        seen.insert(g.clone());
                        stabilizer.push(g);
                    }
                }
            }
        }
        i += 1;
    }
    Ok(Schreier { points, words, stabilizer })
}
