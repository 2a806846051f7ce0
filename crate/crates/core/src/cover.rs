//! Unbranched coverings of a marked base origami, encoded by monodromy tuples along a fixed
//! generating system of the punctured base, and their Veech groups as stabilizers.
//!
//! The action of `T, S, t, s` on tuples is given by substitution rules in the free group on the
//! generators. The built-in marking is the one of the origami `D`; other bases can be supplied
//! through [`BaseMarking::custom`].

use std::fmt;

use crate::error::{Error, Result};
use crate::origami::{from_xye, singularity_profile, Origami, Sign, Xye};
use crate::perm::{is_transitive, min_orbit_code, orbits, simultaneous_conjugacy, Perm};
use crate::schreier::explore;
use crate::word::{GroupWord, Letter};

/// Freely reduced word in generators `0..n`; `(g, true)` is the inverse of `g`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<(usize, bool)>);

impl FreeWord {
    pub fn new(letters: impl IntoIterator<Item = (usize, bool)>) -> Self {
        let mut out: Vec<(usize, bool)> = Vec::new();
        for (g, inv) in letters {
            if out.last() == Some(&(g, !inv)) {
                out.pop();
            } else {
                out.push((g, inv));
            }
        }
        FreeWord(out)
    }

    pub fn generator(g: usize) -> Self {
        FreeWord(vec![(g, false)])
    }

    /// Space-separated generator indices, `'` marking an inverse: `"4 2' 6"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (num, inv) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let g = num.parse().map_err(|_| Error::Validation(format!("bad generator '{tok}'")))?;
            letters.push((g, inv));
        }
        Ok(FreeWord::new(letters))
    }

    pub fn letters(&self) -> &[(usize, bool)] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|&(g, i)| (g, !i)).collect())
    }

    /// `τ_{g₁}^{±1} ∘ τ_{g₂}^{±1} ∘ …` (the last letter is applied first).
    pub fn eval(&self, tuple: &[Perm], degree: usize) -> Perm {
        let mut acc = Perm::identity(degree);
        for &(g, inv) in &self.0 {
            let p = if inv { tuple[g].inverse() } else { tuple[g].clone() };
            acc = &acc * &p;
        }
        acc
    }

    /// Replaces every generator `j` by `images[j]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        FreeWord::new(self.0.iter().flat_map(|&(g, inv)| {
            let w = if inv { images[g].inverse() } else { images[g].clone() };
            w.0
        }))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(g, inv)| if inv { format!("tau{g}^-1") } else { format!("tau{g}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An endomorphism of the free group: slot `i` of the image tuple is `words[i]` evaluated on
/// the input tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution(pub Vec<FreeWord>);

impl Substitution {
    pub fn identity(n: usize) -> Self {
        Substitution((0..n).map(FreeWord::generator).collect())
    }

    pub fn apply(&self, tuple: &[Perm], degree: usize) -> Vec<Perm> {
        self.0.iter().map(|w| w.eval(tuple, degree)).collect()
    }

    /// Applying `self` and then `next`.
    pub fn then(&self, next: &Substitution) -> Substitution {
        Substitution(next.0.iter().map(|w| w.substitute(&self.0)).collect())
    }
}

/// A small loop around a corner point of the base and the order of that point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Puncture {
    pub name: String,
    pub word: FreeWord,
    pub order: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rules {
    pub t: Substitution,
    pub t_inv: Substitution,
    pub s: Substitution,
    pub s_inv: Substitution,
}

impl Rules {
    pub fn get(&self, l: Letter) -> &Substitution {
        match l {
            Letter::T => &self.t,
            Letter::TInv => &self.t_inv,
            Letter::S => &self.s,
            Letter::SInv => &self.s_inv,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseMarking {
    pub name: String,
    pub base: Origami,
    pub generators: Vec<String>,
    pub punctures: Vec<Puncture>,
    pub rules: Rules,
    /// Slot actions of the base automorphisms, identity first.
    pub twists: Vec<Substitution>,
}

fn words(specs: &[&str]) -> Substitution {
    Substitution(specs.iter().map(|s| FreeWord::parse(s).expect("static word")).collect())
}

impl BaseMarking {
    /// The six-square origami `D` (`x = (1 2 3 4 5 6)`, `y = (1 2 5 6 3 4)`, `eps = -+-+-+`)
    /// with generators `τ0..τ6`. Its Veech group is all of `PSL(2,Z)` and its automorphism
    /// group has order 3; the twists are the slot actions of `S²` and `S⁴`.
    pub fn d() -> Self {
        let x = Perm::from_cycles(6, &[vec![0, 1, 2, 3, 4, 5]]).expect("static");
        let y = Perm::from_cycles(6, &[vec![0, 1, 4, 5, 2, 3]]).expect("static");
        let eps = [Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus].to_vec();
        let base = from_xye(&Xye { x, y, eps }).expect("D is connected");
        let t = words(&["0", "1", "2", "3", "5", "6", "4' 0'"]);
        let t_inv = words(&["0", "1", "2", "3", "0' 6'", "4", "5"]);
        let s = words(&[
            "4 2' 6 3' 5' 1'",
            "1 5 3 6' 2 6 3' 5' 1'",
            "1 5 3 5' 1'",
            "1",
            "1 5 3 6' 2 5' 1'",
            "1 5 3 6' 1'",
            "1 5 3 0",
        ]);
        let punctures = [
            ("pole 1", "1", -1),
            ("pole 2", "2", -1),
            ("pole 3", "3", -1),
            ("zero 1", "0 1 2 3", 1),
            ("zero 2", "5' 4 6", 1),
            ("zero 3", "6' 5 4' 0'", 1),
        ]
        .iter()
        .map(|&(name, w, order)| Puncture { name: name.into(), word: FreeWord::parse(w).expect("static"), order })
        .collect();
        let rules = Rules { t, t_inv, s: s.clone(), s_inv: s };
        BaseMarking::custom("D", base, (0..7).map(|i| format!("tau{i}")).collect(), punctures, rules, None)
            .expect("the built-in marking is consistent")
    }

    /// A user-supplied marking. When `twists` is `None` they are taken to be the slot actions
    /// of `S²` and `S⁴`, which is right when the base automorphism group is generated by the
    /// action of `S²` (as for `D`).
    pub fn custom(
        name: &str,
        base: Origami,
        generators: Vec<String>,
        punctures: Vec<Puncture>,
        rules: Rules,
        twists: Option<Vec<Substitution>>,
    ) -> Result<Self> {
        let n = generators.len();
        let all_words = [&rules.t, &rules.t_inv, &rules.s, &rules.s_inv]
            .into_iter()
            .flat_map(|s| s.0.iter())
            .chain(punctures.iter().map(|p| &p.word));
        for w in all_words {
            if w.letters().iter().any(|&(g, _)| g >= n) {
                return Err(Error::Validation(format!("word {w} uses an unknown generator")));
            }
        }
        if [&rules.t, &rules.t_inv, &rules.s, &rules.s_inv].iter().any(|s| s.0.len() != n) {
            return Err(Error::Validation("every rule needs one word per generator".into()));
        }
        let profile = singularity_profile(&base)?;
        let mut orders: Vec<i64> = punctures.iter().map(|p| p.order).filter(|&m| m != 0).collect();
        orders.sort_unstable();
        if orders != profile.orders {
            return Err(Error::Validation("puncture orders do not match the base singularities".into()));
        }
        let twists = match twists {
            Some(t) => t,
            None => {
                let s2 = rules.s.then(&rules.s);
                vec![Substitution::identity(n), s2.clone(), s2.then(&s2)]
            }
        };
        Ok(BaseMarking { name: name.into(), base, generators, punctures, rules, twists })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonodromyTuple {
    pub degree: usize,
    pub perms: Vec<Perm>,
}

impl MonodromyTuple {
    pub fn identity(degree: usize, len: usize) -> Self {
        MonodromyTuple { degree, perms: vec![Perm::identity(degree); len] }
    }

    /// `N=3; tau0=(1 2); …`; missing slots are the identity.
    pub fn parse(text: &str, len: usize) -> Result<Self> {
        let mut degree = None;
        let mut slots: Vec<Option<String>> = vec![None; len];
        let mut offset = 0;
        for part in text.split(';') {
            let here = offset + part.chars().take_while(|c| c.is_whitespace()).count();
            offset += part.chars().count() + 1;
            if part.trim().is_empty() {
                continue;
            }
            let (k, v) = part.split_once('=').ok_or(Error::Syntax { pos: here, msg: "expected key=value".into() })?;
            let k = k.trim();
            if k == "N" {
                degree = Some(v.trim().parse::<usize>().map_err(|_| Error::Syntax { pos: here, msg: "bad N".into() })?);
            } else if let Some(i) = k.strip_prefix("tau").and_then(|i| i.parse::<usize>().ok()).filter(|&i| i < len) {
                slots[i] = Some(v.to_string());
            } else {
                return Err(Error::Syntax { pos: here, msg: format!("unknown key '{k}'") });
            }
        }
        let degree = degree.ok_or(Error::Syntax { pos: 0, msg: "missing N=".into() })?;
        if degree == 0 {
            return Err(Error::Validation("N must be positive".into()));
        }
        let perms = slots
            .iter()
            .map(|s| match s {
                Some(t) => crate::text::parse_perm(t, degree),
                None => Ok(Perm::identity(degree)),
            })
            .collect::<Result<_>>()?;
        Ok(MonodromyTuple { degree, perms })
    }
}

impl fmt::Display for MonodromyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={}", self.degree)?;
        for (i, p) in self.perms.iter().enumerate() {
            write!(f, "; tau{i}={p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongLength { expected: usize, found: usize },
    DegreeMismatch { slot: usize, degree: usize },
    Disconnected,
    /// A 2-cycle over a pole: the pole would be unfolded into a regular point.
    PoleCancellation { puncture: String, cycle: Vec<usize> },
    /// A nontrivial cycle over a regular corner.
    BranchingOverRegularPoint { puncture: String, cycle: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cyc = |c: &[usize]| c.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ");
        match self {
            Violation::WrongLength { expected, found } => write!(f, "expected {expected} permutations, found {found}"),
            Violation::DegreeMismatch { slot, degree } => write!(f, "slot {slot} has degree {degree}"),
            Violation::Disconnected => write!(f, "disconnected"),
            Violation::PoleCancellation { puncture, cycle } => write!(f, "pole cancellation at {puncture}: ({})", cyc(cycle)),
            Violation::BranchingOverRegularPoint { puncture, cycle } => {
                write!(f, "branching over regular point {puncture}: ({})", cyc(cycle))
            }
        }
    }
}

pub fn validate(b: &BaseMarking, t: &MonodromyTuple) -> Vec<Violation> {
    let mut out = Vec::new();
    if t.perms.len() != b.generators.len() {
        out.push(Violation::WrongLength { expected: b.generators.len(), found: t.perms.len() });
        return out;
    }
    for (slot, p) in t.perms.iter().enumerate() {
        if p.degree() != t.degree {
            out.push(Violation::DegreeMismatch { slot, degree: p.degree() });
        }
    }
    if !out.is_empty() {
        return out;
    }
    if !is_transitive(&t.perms, t.degree) {
        out.push(Violation::Disconnected);
    }
    for p in &b.punctures {
        let m = p.word.eval(&t.perms, t.degree);
        for cycle in m.cycles() {
            match (p.order, cycle.len()) {
                (-1, 2) => out.push(Violation::PoleCancellation { puncture: p.name.clone(), cycle }),
                (0, k) if k > 1 => {
                    out.push(Violation::BranchingOverRegularPoint { puncture: p.name.clone(), cycle })
                }
                _ => {}
            }
        }
    }
    out
}

fn require_valid(b: &BaseMarking, t: &MonodromyTuple) -> Result<()> {
    let v = validate(b, t);
    if v.is_empty() {
        Ok(())
    } else {
        let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
        Err(Error::InvalidTuple(msgs.join("; ")))
    }
}

fn act_unchecked(b: &BaseMarking, g: Letter, t: &MonodromyTuple) -> MonodromyTuple {
    MonodromyTuple { degree: t.degree, perms: b.rules.get(g).apply(&t.perms, t.degree) }
}

pub fn act_on_tuple(b: &BaseMarking, g: Letter, t: &MonodromyTuple) -> Result<MonodromyTuple> {
    require_valid(b, t)?;
    Ok(act_unchecked(b, g, t))
}

/// [`act_on_tuple`] over the built-in marking of `D`.
pub fn act_on_tuple_d(g: Letter, t: &MonodromyTuple) -> Result<MonodromyTuple> {
    act_on_tuple(&BaseMarking::d(), g, t)
}

/// Key of a tuple under simultaneous conjugation (orbits are keyed separately and sorted).
fn conjugacy_key(perms: &[Perm], degree: usize) -> Vec<usize> {
    let mut parts: Vec<Vec<usize>> = orbits(perms, degree)
        .iter()
        .map(|o| {
            let mut c = min_orbit_code(perms, o).0;
            c.push(o.len());
            c
        })
        .collect();
    parts.sort();
    let mut key = vec![degree];
    for p in parts {
        key.push(p.len());
        key.extend(p);
    }
    key
}

/// Key of the class of a tuple under conjugation combined with the base twists.
pub fn class_key(b: &BaseMarking, t: &MonodromyTuple) -> Vec<usize> {
    b.twists
        .iter()
        .map(|tw| conjugacy_key(&tw.apply(&t.perms, t.degree), t.degree))
        .min()
        .expect("the identity twist is always present")
}

pub fn tuple_equivalent(b: &BaseMarking, t1: &MonodromyTuple, t2: &MonodromyTuple) -> Result<bool> {
    if t1.degree != t2.degree {
        return Err(Error::DegreeMismatch(t1.degree, t2.degree));
    }
    if t1.perms.len() != t2.perms.len() {
        return Err(Error::InvalidTuple("tuples of different lengths".into()));
    }
    Ok(b.twists
        .iter()
        .any(|tw| simultaneous_conjugacy(&tw.apply(&t1.perms, t1.degree), &t2.perms, t1.degree).is_some()))
}

#[derive(Clone, Debug)]
pub struct CoverVeechResult {
    pub index: usize,
    pub coset_reps: Vec<GroupWord>,
    pub stabilizer_gens: Vec<GroupWord>,
    /// Orbit tuples aligned with `coset_reps`.
    pub orbit: Vec<MonodromyTuple>,
}

/// Veech group of the cover as the stabilizer of its tuple class; the base Veech group is
/// assumed to be all of `PSL(2,Z)`.
pub fn cover_veech_group(b: &BaseMarking, t: &MonodromyTuple) -> Result<CoverVeechResult> {
    require_valid(b, t)?;
    let sch = explore(t.clone(), |p| Ok(class_key(b, p)), |l, p| Ok(act_unchecked(b, l, p)))?;
    Ok(CoverVeechResult {
        index: sch.points.len(),
        coset_reps: sch.words,
        stabilizer_gens: sch.stabilizer,
        orbit: sch.points,
    })
}

/// Applies the letters of `w` in order, without validation.
pub fn act_word_on_tuple(b: &BaseMarking, w: &GroupWord, t: &MonodromyTuple) -> MonodromyTuple {
    w.letters().iter().fold(t.clone(), |acc, &l| act_unchecked(b, l, &acc))
}
