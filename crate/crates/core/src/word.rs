//! Words in the generators `T = [[1,1],[0,1]]` and `S = [[0,1],[-1,0]]` of `SL(2,Z)`.
//!
//! A word acts on the right: its first letter is applied first. Its matrix is the product of
//! the letter matrices in word order.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    T,
    S,
    TInv,
    SInv,
}

impl Letter {
    /// Exploration order of orbit searches.
    pub const ALL: [Letter; 4] = [Letter::T, Letter::S, Letter::TInv, Letter::SInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
            Letter::S => Letter::SInv,
            Letter::SInv => Letter::S,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::T => 'T',
            Letter::S => 'S',
            Letter::TInv => 't',
            Letter::SInv => 's',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'T' => Some(Letter::T),
            'S' => Some(Letter::S),
            't' => Some(Letter::TInv),
            's' => Some(Letter::SInv),
            _ => None,
        }
    }

    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::T => Mat2::new(1, 1, 0, 1),
            Letter::S => Mat2::new(0, 1, -1, 0),
            Letter::TInv => Mat2::new(1, -1, 0, 1),
            Letter::SInv => Mat2::new(0, -1, 1, 0),
        }
    }
}

/// Freely reduced word over `T, S, t = T⁻¹, s = S⁻¹`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(Vec<Letter>);

impl GroupWord {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn then(&self, other: &GroupWord) -> Self {
        GroupWord::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn matrix(&self) -> Mat2 {
        self.0.iter().fold(Mat2::identity(), |m, l| m * l.matrix())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "1" || t.is_empty() {
            return Ok(GroupWord::empty());
        }
        let mut letters = Vec::new();
        for (pos, c) in s.chars().enumerate() {
            if c.is_whitespace() {
                continue;
            }
            letters.push(Letter::from_char(c).ok_or(Error::Syntax {
                pos,
                msg: format!("expected one of T S t s, found '{c}'"),
            })?);
        }
        Ok(GroupWord::new(letters))
    }
}

/// Integer 2×2 matrix `[[a,b],[c,d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub const fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn from_rows(rows: [[i64; 2]; 2]) -> Self {
        Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn neg(&self) -> Self {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }

    /// Equal up to sign, i.e. equal in `PSL(2,Z)`.
    pub fn projectively_eq(&self, other: &Mat2) -> bool {
        self == other || *self == other.neg()
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, r: Mat2) -> Mat2 {
        Mat2::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `PSL(2,Z)`; the default for every origami.
    Projective,
    /// `SL(2,Z)`; abelian origamis only.
    Linear,
}

/// A word whose matrix is `m` (linear) or `±m` (projective), by the Euclidean algorithm on the
/// bottom row. Projective words use `S` only (no `s`, no `SS`).
pub fn matrix_to_word(m: Mat2, mode: Mode) -> Result<GroupWord> {
    if m.det() != 1 {
        return Err(Error::NotUnimodular(m.det()));
    }
    let mut cur = m;
    let mut right: Vec<Letter> = Vec::new();
    while cur.c != 0 {
        let target = cur.d.rem_euclid(cur.c.abs());
        let k = (target - cur.d) / cur.c;
        let l = if k >= 0 { Letter::T } else { Letter::TInv };
        for _ in 0..k.abs() {
            cur = cur * l.matrix();
            right.push(l);
        }
        cur = cur * Letter::S.matrix();
        right.push(Letter::S);
    }
    // cur = a·T^(ab) with a = ±1, and m·R = cur
    let sign = cur.a;
    let power = cur.a * cur.b;
    let mut letters: Vec<Letter> = Vec::new();
    if sign == -1 && mode == Mode::Linear {
        letters.extend([Letter::S, Letter::S]);
    }
    let t = if power >= 0 { Letter::T } else { Letter::TInv };
    letters.extend(std::iter::repeat_n(t, power.unsigned_abs() as usize));
    letters.extend(right.iter().rev().map(|l| l.inverse()));
    let word = match mode {
        Mode::Linear => GroupWord::new(letters),
        Mode::Projective => projective_reduce(letters),
    };
    let p = word.matrix();
    let ok = match mode {
        Mode::Linear => p == m,
        Mode::Projective => p.projectively_eq(&m),
    };
    if !ok {
        return Err(Error::NormalizationFailure(format!("word {word} does not evaluate to {m}")));
    }
    Ok(word)
}

/// Replaces `s` by `S` and cancels `SS` as well as `Tt`, `tT`.
fn projective_reduce(letters: Vec<Letter>) -> GroupWord {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        let l = if l == Letter::SInv { Letter::S } else { l };
        match (out.last(), l) {
            (Some(Letter::S), Letter::S) => {
                out.pop();
            }
            (Some(&p), l) if p == l.inverse() => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    GroupWord(out)
}
