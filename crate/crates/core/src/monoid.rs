//! The sign monoid `W_n` and its monoid algebra.
//!
//! A word of level `n` is a sequence of `2n + 1` entries of `{+1, -1, 0}`
//! whose odd positions are nonzero and in which no two neighbours multiply
//! to `-1`. Words multiply componentwise; the all-plus word is the unit.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::MonoidError;
use crate::field::Field;

/// Default upper bound on `n` for exhaustive enumeration of `W_n`.
pub const DEFAULT_LEVEL_CAP: usize = 8;

/// An element of `{+1, -1, 0}`. Ordered `+ < - < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriSign {
    Plus,
    Minus,
    Zero,
}

impl TriSign {
    pub const ALL: [TriSign; 3] = [TriSign::Plus, TriSign::Minus, TriSign::Zero];

    pub fn to_char(self) -> char {
        match self {
            TriSign::Plus => '+',
            TriSign::Minus => '-',
            TriSign::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Result<Self, MonoidError> {
        match c {
            '+' => Ok(TriSign::Plus),
            '-' => Ok(TriSign::Minus),
            '0' => Ok(TriSign::Zero),
            other => Err(MonoidError::BadSign(other)),
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            TriSign::Plus => 1,
            TriSign::Minus => -1,
            TriSign::Zero => 0,
        }
    }

    /// Membership in `U = {+1, -1}`.
    pub fn is_unit(self) -> bool {
        self != TriSign::Zero
    }

    /// Membership in `E = {+1, 0}`.
    pub fn is_idempotent(self) -> bool {
        self != TriSign::Minus
    }
}

impl Mul for TriSign {
    type Output = TriSign;
    fn mul(self, rhs: TriSign) -> TriSign {
        use TriSign::*;
        match (self, rhs) {
            (Zero, _) | (_, Zero) => Zero,
            (Plus, x) | (x, Plus) => x,
            (Minus, Minus) => Plus,
        }
    }
}

impl From<Sign> for TriSign {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => TriSign::Plus,
            Sign::Minus => TriSign::Minus,
        }
    }
}

/// An element of `U = {+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_char(self) -> char {
        TriSign::from(self).to_char()
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<TriSign> for Sign {
    type Error = MonoidError;
    fn try_from(v: TriSign) -> Result<Self, MonoidError> {
        match v {
            TriSign::Plus => Ok(Sign::Plus),
            TriSign::Minus => Ok(Sign::Minus),
            TriSign::Zero => Err(MonoidError::BadSign('0')),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// An element of `W_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    coords: Vec<TriSign>,
}

impl Word {
    /// Checks membership in `W_n`.
    ///
    /// Reported indices are 1-based positions: for an odd position the
    /// entry itself is zero, for an adjacent pair it is the left position.
    pub fn new(coords: Vec<TriSign>) -> Result<Self, MonoidError> {
        if coords.len() < 3 || coords.len() % 2 == 0 {
            return Err(MonoidError::RejectedWord {
                index: coords.len(),
                reason: "length must be odd and at least 3",
            });
        }
        for (j, &v) in coords.iter().enumerate() {
            if j % 2 == 0 && !v.is_unit() {
                return Err(MonoidError::RejectedWord {
                    index: j + 1,
                    reason: "odd position is zero",
                });
            }
            if let Some(&next) = coords.get(j + 1) {
                if !(v * next).is_idempotent() {
                    return Err(MonoidError::RejectedWord {
                        index: j + 1,
                        reason: "adjacent product is -1",
                    });
                }
            }
        }
        Ok(Word { coords })
    }

    /// The unit of `W_n`: all entries `+`.
    pub fn identity(n: usize) -> Self {
        Word {
            coords: vec![TriSign::Plus; 2 * n + 1],
        }
    }

    pub fn level(&self) -> usize {
        (self.coords.len() - 1) / 2
    }

    pub fn coords(&self) -> &[TriSign] {
        &self.coords
    }

    /// Entry at 1-based position `j`.
    pub fn at(&self, j: usize) -> TriSign {
        self.coords[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&v| v == TriSign::Plus)
    }

    pub fn mul(&self, other: &Word) -> Result<Word, MonoidError> {
        if self.level() != other.level() {
            return Err(MonoidError::LevelMismatch(self.level(), other.level()));
        }
        Ok(Word {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a * b)
                .collect(),
        })
    }

    /// The action on `U`: `w · s = w_1 w_{2n+1} s`.
    pub fn act_on_sign(&self, s: Sign) -> Sign {
        let first = Sign::try_from(self.coords[0]).expect("odd entries are nonzero");
        let last = Sign::try_from(*self.coords.last().unwrap()).expect("odd entries are nonzero");
        first * last * s
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.coords {
            write!(f, "{}", v.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = MonoidError;
    fn from_str(s: &str) -> Result<Self, MonoidError> {
        let coords = s.chars().map(TriSign::from_char).collect::<Result<Vec<_>, _>>()?;
        Word::new(coords)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `g_i`: all `+` except `0` at position `2i`.
pub fn gen_g(n: usize, i: usize) -> Result<Word, MonoidError> {
    if i == 0 || i > n {
        return Err(MonoidError::IndexOutOfRange { n, index: i });
    }
    let mut coords = vec![TriSign::Plus; 2 * n + 1];
    coords[2 * i - 1] = TriSign::Zero;
    Ok(Word { coords })
}

/// `h_i`: `-` on positions `1..2i-1`, `0` at `2i`, `+` afterwards.
pub fn gen_h(n: usize, i: usize) -> Result<Word, MonoidError> {
    if i == 0 || i > n {
        return Err(MonoidError::IndexOutOfRange { n, index: i });
    }
    let mut coords = vec![TriSign::Plus; 2 * n + 1];
    for c in coords.iter_mut().take(2 * i - 1) {
        *c = TriSign::Minus;
    }
    coords[2 * i - 1] = TriSign::Zero;
    Ok(Word { coords })
}

/// All of `W_n` in increasing word order.
pub fn wn_enumerate(n: usize, cap: usize) -> Result<Vec<Word>, MonoidError> {
    if n > cap {
        return Err(MonoidError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Err(MonoidError::RejectedWord {
            index: 1,
            reason: "length must be odd and at least 3",
        });
    }
    let len = 2 * n + 1;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    extend_words(len, &mut prefix, &mut out);
    Ok(out)
}

fn extend_words(len: usize, prefix: &mut Vec<TriSign>, out: &mut Vec<Word>) {
    if prefix.len() == len {
        out.push(Word {
            coords: prefix.clone(),
        });
        return;
    }
    let pos = prefix.len();
    for v in TriSign::ALL {
        if pos % 2 == 0 && !v.is_unit() {
            continue;
        }
        if let Some(&prev) = prefix.last() {
            if !(prev * v).is_idempotent() {
                continue;
            }
        }
        prefix.push(v);
        extend_words(len, prefix, out);
        prefix.pop();
    }
}

/// A finite linear combination of words of one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidAlgElem<F> {
    n: usize,
    terms: BTreeMap<Word, F>,
}

impl<F: Field> MonoidAlgElem<F> {
    pub fn zero(n: usize) -> Self {
        MonoidAlgElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Word::identity(n))
    }

    /// The basis element `[w]`.
    pub fn basis(w: Word) -> Self {
        let n = w.level();
        let mut terms = BTreeMap::new();
        terms.insert(w, F::one());
        MonoidAlgElem { n, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, F)>>(n: usize, terms: I) -> Result<Self, MonoidError> {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            if w.level() != n {
                return Err(MonoidError::LevelMismatch(n, w.level()));
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                let s = slot.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    fn check_level(&self, other: &Self) -> Result<(), MonoidError> {
        if self.n != other.n {
            Err(MonoidError::LevelMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MonoidError> {
        self.check_level(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MonoidError> {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.n);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Convolution product extending the word product bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self, MonoidError> {
        self.check_level(other)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b)?, x.clone() * y.clone());
            }
        }
        Ok(out)
    }

    /// JSON list of `{coeff, word}` pairs in word order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| json!({"coeff": c.to_string(), "word": w.to_string()}))
                .collect(),
        )
    }
}

/// `T_n = Σ_i (1 - [g_1]) ... (1 - [g_{i-1}]) [h_i]`, expanded.
pub fn build_t<F: Field>(n: usize) -> Result<MonoidAlgElem<F>, MonoidError> {
    let one = MonoidAlgElem::<F>::one(n);
    let mut prefix = one.clone();
    let mut total = MonoidAlgElem::zero(n);
    for i in 1..=n {
        total = total.add(&prefix.mul(&MonoidAlgElem::basis(gen_h(n, i)?))?)?;
        prefix = prefix.mul(&one.sub(&MonoidAlgElem::basis(gen_g(n, i)?))?)?;
    }
    Ok(total)
}

/// `Z_n = (1 - [g_1]) ... (1 - [g_n])`, expanded.
pub fn build_z<F: Field>(n: usize) -> Result<MonoidAlgElem<F>, MonoidError> {
    let one = MonoidAlgElem::<F>::one(n);
    let mut acc = one.clone();
    for i in 1..=n {
        acc = acc.mul(&one.sub(&MonoidAlgElem::basis(gen_g(n, i)?))?)?;
    }
    Ok(acc)
}

/// `Π_{i∈S} g_i` for a subset given as 1-based indices.
pub fn g_product(n: usize, subset: &[usize]) -> Result<Word, MonoidError> {
    let mut w = Word::identity(n);
    for &i in subset {
        w = w.mul(&gen_g(n, i)?)?;
    }
    Ok(w)
}

/// Whether `T_n^2 + Z_n = 1` holds exactly in `k[W_n]`.
pub fn check_t_squared<F: Field>(n: usize, cap: usize) -> Result<bool, MonoidError> {
    if n > cap {
        return Err(MonoidError::CapExceeded { n, cap });
    }
    let t = build_t::<F>(n)?;
    let z = build_z::<F>(n)?;
    Ok(t.mul(&t)?.add(&z)? == MonoidAlgElem::one(n))
}

/// `w · s = w_1 w_{2n+1} s`.
pub fn act_on_u(w: &Word, s: Sign) -> Sign {
    w.act_on_sign(s)
}

/// Whether every word in the support of `x` carries `s` to `t`.
pub fn homset_member<F: Field>(x: &MonoidAlgElem<F>, s: Sign, t: Sign) -> bool {
    x.terms().all(|(w, _)| w.act_on_sign(s) == t)
}

/// The common target of `s` under the support of `x`, if the support agrees.
/// Zero has no well-defined target and returns `None`.
pub fn homset_target<F: Field>(x: &MonoidAlgElem<F>, s: Sign) -> Option<Sign> {
    let mut words = x.terms().map(|(w, _)| w.act_on_sign(s));
    let t = words.next()?;
    words.all(|u| u == t).then_some(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use num_rational::BigRational;

    type Q = BigRational;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        assert_eq!(w("+0+").level(), 1);
        assert!(matches!(
            "+-+".parse::<Word>(),
            Err(MonoidError::RejectedWord { index: 1, .. })
        ));
        assert!(matches!(
            "+00".parse::<Word>(),
            Err(MonoidError::RejectedWord { index: 3, .. })
        ));
        assert!("++".parse::<Word>().is_err());
        assert!("+x+".parse::<Word>().is_err());
    }

    #[test]
    fn multiplication_examples() {
        let h1 = gen_h(1, 1).unwrap();
        let g1 = gen_g(1, 1).unwrap();
        assert_eq!(h1, w("-0+"));
        assert_eq!(h1.mul(&h1).unwrap(), g1);
        assert_eq!(g1.mul(&h1).unwrap(), h1);
        assert_eq!(Word::identity(1).mul(&h1).unwrap(), h1);
        assert!(matches!(
            h1.mul(&Word::identity(2)),
            Err(MonoidError::LevelMismatch(1, 2))
        ));
    }

    #[test]
    fn generator_displays() {
        assert_eq!(gen_g(2, 1).unwrap().to_string(), "+0+++");
        assert_eq!(gen_h(2, 2).unwrap().to_string(), "---0+");
        let g = gen_g(1, 1).unwrap();
        assert_eq!(g.mul(&g).unwrap(), g);
        assert!(gen_g(2, 3).is_err());
        assert!(gen_h(2, 0).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(wn_enumerate(1, 8).unwrap().len(), 6);
        assert_eq!(wn_enumerate(2, 8).unwrap().len(), 18);
        assert!(matches!(
            wn_enumerate(9, 8),
            Err(MonoidError::CapExceeded { n: 9, cap: 8 })
        ));
    }

    #[test]
    fn algebra_examples() {
        let one = MonoidAlgElem::<Q>::one(1);
        let g1 = MonoidAlgElem::basis(gen_g(1, 1).unwrap());
        let lhs = one.sub(&g1).unwrap().mul(&one.add(&g1).unwrap()).unwrap();
        assert_eq!(lhs, one.sub(&g1).unwrap());
        let zero = MonoidAlgElem::<Q>::zero(1);
        assert!(zero.mul(&g1).unwrap().is_zero());
        let h1 = MonoidAlgElem::<Q>::basis(gen_h(1, 1).unwrap());
        assert_eq!(h1.mul(&h1).unwrap(), g1);
    }

    #[test]
    fn t_and_z_small() {
        let t1 = build_t::<Q>(1).unwrap();
        assert_eq!(t1, MonoidAlgElem::basis(gen_h(1, 1).unwrap()));
        let z1 = build_z::<Q>(1).unwrap();
        let one = MonoidAlgElem::<Q>::one(1);
        assert_eq!(z1, one.sub(&MonoidAlgElem::basis(gen_g(1, 1).unwrap())).unwrap());

        let z2 = build_z::<Q>(2).unwrap();
        let g1 = gen_g(2, 1).unwrap();
        let g2 = gen_g(2, 2).unwrap();
        let expected = MonoidAlgElem::from_terms(
            2,
            [
                (Word::identity(2), Q::from_i64(1)),
                (g1.clone(), Q::from_i64(-1)),
                (g2.clone(), Q::from_i64(-1)),
                (g1.mul(&g2).unwrap(), Q::from_i64(1)),
            ],
        )
        .unwrap();
        assert_eq!(z2, expected);
    }

    #[test]
    fn term_counts() {
        for n in 1..=6 {
            let t = build_t::<Q>(n).unwrap();
            let z = build_z::<Q>(n).unwrap();
            assert_eq!(t.len(), (1 << n) - 1);
            assert_eq!(z.len(), 1 << n);
            assert!(t
                .terms()
                .all(|(_, c)| *c == Q::from_i64(1) || *c == Q::from_i64(-1)));
        }
    }

    #[test]
    fn t_squared_examples() {
        assert!(check_t_squared::<Q>(1, 8).unwrap());
        assert!(check_t_squared::<Q>(2, 8).unwrap());
        assert!(check_t_squared::<Fp<2>>(5, 8).unwrap());
    }

    #[test]
    fn action_and_homsets() {
        let h1 = gen_h(1, 1).unwrap();
        assert_eq!(act_on_u(&h1, Sign::Plus), Sign::Minus);
        for n in 1..=4 {
            let t = build_t::<Q>(n).unwrap();
            let z = build_z::<Q>(n).unwrap();
            for s in Sign::BOTH {
                assert!(homset_member(&t, s, s.flip()));
                assert!(!homset_member(&t, s, s));
                assert!(homset_member(&z, s, s));
                assert_eq!(homset_target(&t, s), Some(s.flip()));
            }
        }
    }

    #[test]
    fn json_shape() {
        let t = build_t::<Q>(2).unwrap();
        let v = t.to_json();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 3);
        assert_eq!(arr[0]["word"], "---0+");
        assert_eq!(arr[0]["coeff"], "1");
        let back: Word = serde_json::from_value(arr[1]["word"].clone()).unwrap();
        assert_eq!(back.level(), 2);
    }
}
