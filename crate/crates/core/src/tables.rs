//! Parametric conjugacy classes and character tables of `PSL2(q)`.
//!
//! Three layouts exist, one per parity case of `q`: even, `q = 3 mod 4` and
//! `q = 1 mod 4`. Classes and characters are kept in the conventional table
//! order, but everything downstream addresses them by label.
//!
//! Roots of unity live in one conductor per `q`: `epsilon = zeta_{q-1}`,
//! `eta0 = zeta_{q+1}` and, for odd `q`, `zeta_p` for the Gauss sum behind
//! `omega = (1 + sqrt(+-q)) / 2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory::{lcm, legendre, prime_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParityCase {
    #[serde(rename = "even")]
    Even,
    #[serde(rename = "1mod4")]
    OneMod4,
    #[serde(rename = "3mod4")]
    ThreeMod4,
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityCase::Even => "even",
            ParityCase::OneMod4 => "1mod4",
            ParityCase::ThreeMod4 => "3mod4",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupParams {
    pub q: u64,
    pub p: u64,
    pub m: u32,
    pub case: ParityCase,
    /// `|PSL2(q)| = q (q^2 - 1) / gcd(2, q - 1)`
    pub order: u64,
    /// Common conductor of every character value.
    pub conductor: u64,
}

/// Smallest `q` covered by the covering-number theorem.
pub const THEOREM_MIN_Q: u64 = 8;

pub fn group_params(q: u64) -> Result<GroupParams> {
    if q < 4 {
        return Err(Error::NotAPrimePower(q));
    }
    let (p, m) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
    let case = match (p, q % 4) {
        (2, _) => ParityCase::Even,
        (_, 1) => ParityCase::OneMod4,
        _ => ParityCase::ThreeMod4,
    };
    let order = if p == 2 {
        q * (q * q - 1)
    } else {
        q * (q * q - 1) / 2
    };
    let conductor = if p == 2 {
        lcm(q - 1, q + 1)
    } else {
        lcm(lcm(q - 1, q + 1), p)
    };
    Ok(GroupParams {
        q,
        p,
        m,
        case,
        order,
        conductor,
    })
}

impl GroupParams {
    /// `epsilon^x` for the primitive `(q-1)`-th root `epsilon`.
    pub fn epsilon(&self, x: i64) -> Cyclotomic {
        let step = (self.conductor / (self.q - 1)) as i64;
        Cyclotomic::root(self.conductor, (x.rem_euclid((self.q - 1) as i64)) * step)
    }

    /// `eta0^x` for the primitive `(q+1)`-th root `eta0`.
    pub fn eta0(&self, x: i64) -> Cyclotomic {
        let step = (self.conductor / (self.q + 1)) as i64;
        Cyclotomic::root(self.conductor, (x.rem_euclid((self.q + 1) as i64)) * step)
    }

    pub fn int(&self, v: i64) -> Cyclotomic {
        Cyclotomic::from_int(self.conductor, v)
    }

    pub fn within_theorem_range(&self) -> bool {
        self.q >= THEOREM_MIN_Q
    }

    /// Number of conjugacy classes (and of irreducible characters).
    pub fn class_count(&self) -> usize {
        match self.case {
            ParityCase::Even => self.q as usize + 1,
            _ => (self.q as usize + 5) / 2,
        }
    }

    /// Principal-series indices `k`.
    pub fn principal_indices(&self) -> Vec<u64> {
        let q = self.q;
        match self.case {
            ParityCase::Even => (1..q / 2).collect(),
            ParityCase::ThreeMod4 => (1..=(q - 3) / 4).map(|i| 2 * i).collect(),
            ParityCase::OneMod4 => (1..=(q - 5) / 4).map(|i| 2 * i).collect(),
        }
    }

    /// Discrete-series indices `j`.
    pub fn discrete_indices(&self) -> Vec<u64> {
        let q = self.q;
        match self.case {
            ParityCase::Even => (1..=q / 2).collect(),
            ParityCase::ThreeMod4 => (1..=(q - 3) / 4).map(|i| 2 * i).collect(),
            ParityCase::OneMod4 => (1..=(q - 1) / 4).map(|i| 2 * i).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Identity,
    UnipN,
    UnipNPrime,
    Split(u64),
    SplitHalf,
    NonSplit(u64),
    NonSplitHalf,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Identity => f.write_str("I"),
            ClassLabel::UnipN => f.write_str("N"),
            ClassLabel::UnipNPrime => f.write_str("N'"),
            ClassLabel::Split(a) => write!(f, "S({a})"),
            ClassLabel::SplitHalf => f.write_str("S(half)"),
            ClassLabel::NonSplit(b) => write!(f, "T({b})"),
            ClassLabel::NonSplitHalf => f.write_str("T(half)"),
        }
    }
}

fn parse_index(s: &str) -> Option<u64> {
    if s.is_empty() || s.len() > 19 || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownClass(s.to_string());
        Ok(match s {
            "I" => ClassLabel::Identity,
            "N" => ClassLabel::UnipN,
            "N'" => ClassLabel::UnipNPrime,
            "S(half)" => ClassLabel::SplitHalf,
            "T(half)" => ClassLabel::NonSplitHalf,
            _ => {
                let inner = |prefix: &str| {
                    s.strip_prefix(prefix)
                        .and_then(|r| r.strip_suffix(')'))
                        .and_then(parse_index)
                };
                if let Some(a) = inner("S(") {
                    ClassLabel::Split(a)
                } else if let Some(b) = inner("T(") {
                    ClassLabel::NonSplit(b)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharLabel {
    /// `psi_1`
    Trivial,
    /// `psi_q`
    Steinberg,
    /// `psi_{q+1}^{(k)}`
    Principal(u64),
    /// `psi_{q-1}^{(j)}`
    Discrete(u64),
    /// `psi'_-`, degree `(q-1)/2`, `q = 3 mod 4`
    HalfMinus1,
    /// `psi''_-`
    HalfMinus2,
    /// `psi'_+`, degree `(q+1)/2`, `q = 1 mod 4`
    HalfPlus1,
    /// `psi''_+`
    HalfPlus2,
}

impl CharLabel {
    pub fn is_trivial(&self) -> bool {
        matches!(self, CharLabel::Trivial)
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::Trivial => f.write_str("triv"),
            CharLabel::Steinberg => f.write_str("st"),
            CharLabel::Principal(k) => write!(f, "pp:{k}"),
            CharLabel::Discrete(j) => write!(f, "dd:{j}"),
            CharLabel::HalfMinus1 => f.write_str("half-:1"),
            CharLabel::HalfMinus2 => f.write_str("half-:2"),
            CharLabel::HalfPlus1 => f.write_str("half+:1"),
            CharLabel::HalfPlus2 => f.write_str("half+:2"),
        }
    }
}

/// Parses the label grammar `triv | st | pp:<k> | dd:<j> | half+:1 | half+:2
/// | half-:1 | half-:2`. Whether an index exists for a given `q` is checked
/// against the table, not here.
impl FromStr for CharLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "triv" => CharLabel::Trivial,
            "st" => CharLabel::Steinberg,
            "half-:1" => CharLabel::HalfMinus1,
            "half-:2" => CharLabel::HalfMinus2,
            "half+:1" => CharLabel::HalfPlus1,
            "half+:2" => CharLabel::HalfPlus2,
            _ => match s.split_once(':') {
                Some(("pp", k)) => CharLabel::Principal(
                    parse_index(k).ok_or_else(|| Error::UnknownCharacter(s.to_string()))?,
                ),
                Some(("dd", j)) => CharLabel::Discrete(
                    parse_index(j).ok_or_else(|| Error::UnknownCharacter(s.to_string()))?,
                ),
                _ => return Err(Error::UnknownCharacter(s.to_string())),
            },
        })
    }
}

macro_rules! serde_via_str {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(
                d: D,
            ) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_str!(ClassLabel);
serde_via_str!(CharLabel);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub label: ClassLabel,
    pub size: u64,
    /// The `a` of `S(a)` or the `b` of `T(b)`, including the half classes.
    pub param: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub label: CharLabel,
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub params: GroupParams,
    pub classes: Vec<ConjugacyClass>,
    pub characters: Vec<Character>,
}

pub fn conjugacy_data(params: &GroupParams) -> Vec<ConjugacyClass> {
    let q = params.q;
    let class = |label, size, param| ConjugacyClass { label, size, param };
    let mut out = vec![class(ClassLabel::Identity, 1, None)];
    match params.case {
        ParityCase::Even => {
            out.push(class(ClassLabel::UnipN, q * q - 1, None));
            out.extend((1..q / 2).map(|a| class(ClassLabel::Split(a), q * (q + 1), Some(a))));
            out.extend((1..=q / 2).map(|b| class(ClassLabel::NonSplit(b), q * (q - 1), Some(b))));
        }
        ParityCase::ThreeMod4 => {
            out.push(class(ClassLabel::UnipN, (q * q - 1) / 2, None));
            out.push(class(ClassLabel::UnipNPrime, (q * q - 1) / 2, None));
            out.extend(
                (1..=(q - 3) / 4).map(|a| class(ClassLabel::Split(a), q * (q + 1), Some(a))),
            );
            out.extend(
                (1..=(q - 3) / 4).map(|b| class(ClassLabel::NonSplit(b), q * (q - 1), Some(b))),
            );
            out.push(class(
                ClassLabel::NonSplitHalf,
                q * (q - 1) / 2,
                Some((q + 1) / 4),
            ));
        }
        ParityCase::OneMod4 => {
            out.push(class(ClassLabel::UnipN, (q * q - 1) / 2, None));
            out.push(class(ClassLabel::UnipNPrime, (q * q - 1) / 2, None));
            out.extend(
                (1..=(q - 5) / 4).map(|a| class(ClassLabel::Split(a), q * (q + 1), Some(a))),
            );
            out.push(class(
                ClassLabel::SplitHalf,
                q * (q + 1) / 2,
                Some((q - 1) / 4),
            ));
            out.extend(
                (1..=(q - 1) / 4).map(|b| class(ClassLabel::NonSplit(b), q * (q - 1), Some(b))),
            );
        }
    }
    out
}

/// The quadratic Gauss sum `sum_{t=1}^{p-1} (t|p) zeta_p^t`, whose square is
/// `(-1)^((p-1)/2) p`.
pub fn gauss_sum(p: u64, conductor: u64) -> Cyclotomic {
    let step = conductor / p;
    let terms = (1..p).map(|t| (t * step, BigInt::from(legendre(t, p))));
    Cyclotomic::from_terms(conductor, terms).expect("exponents below conductor")
}

/// `(omega, omega*) = ((1 + s) / 2, (1 - s) / 2)` with `s^2 = q` for
/// `q = 1 mod 4` and `s^2 = -q` for `q = 3 mod 4`.
pub fn omega_values(params: &GroupParams) -> Result<(Cyclotomic, Cyclotomic)> {
    if params.case == ParityCase::Even {
        return Err(Error::CaseMismatch {
            what: "omega",
            q: params.q,
        });
    }
    let n = params.conductor;
    let omega = if params.m.is_multiple_of(2) {
        // s = p^(m/2) is rational and odd
        let s = BigInt::from(params.p).pow(params.m / 2);
        Cyclotomic::from_int(n, (BigInt::one() + s) / 2)
    } else {
        // s = c * g with c = p^((m-1)/2) odd and g the Gauss sum, whose
        // square carries the sign matching q mod 4. Using
        // (1 + g) / 2 = -sum over non-residues of zeta_p^t keeps the
        // coefficients integral:
        // (1 + c g) / 2 = (1 - c) / 2 + c (1 + g) / 2.
        let c = BigInt::from(params.p).pow((params.m - 1) / 2);
        let step = n / params.p;
        let half_one_plus_g = Cyclotomic::from_terms(
            n,
            (1..params.p)
                .filter(|&t| legendre(t, params.p) == -1)
                .map(|t| (t * step, BigInt::from(-1))),
        )
        .expect("exponents below conductor");
        let (shift, rem) = (BigInt::one() - &c).div_rem(&BigInt::from(2));
        debug_assert!(rem.is_zero());
        &Cyclotomic::from_int(n, shift) + &half_one_plus_g.scale(&c)
    };
    let omega_star = &params.int(1) - &omega;
    Ok((omega, omega_star))
}

fn sign(exponent: i64) -> i64 {
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

struct ValueContext<'a> {
    params: &'a GroupParams,
    omega: Option<(Cyclotomic, Cyclotomic)>,
}

impl ValueContext<'_> {
    fn value(&self, chi: CharLabel, class: ClassLabel) -> Cyclotomic {
        use CharLabel as X;
        use ClassLabel as C;
        let p = self.params;
        let q = p.q as i64;
        let int = |v: i64| p.int(v);
        let zero = || Cyclotomic::zero(p.conductor);
        let eps_pair = |x: i64| &p.epsilon(x) + &p.epsilon(-x);
        let eta_pair = |x: i64| &p.eta0(x) + &p.eta0(-x);
        let (omega, omega_star) = match &self.omega {
            Some((w, ws)) => (w.clone(), ws.clone()),
            None => (zero(), zero()),
        };
        match (chi, class) {
            (X::Trivial, _) => int(1),

            (X::Steinberg, C::Identity) => int(q),
            (X::Steinberg, C::UnipN | C::UnipNPrime) => zero(),
            (X::Steinberg, C::Split(_) | C::SplitHalf) => int(1),
            (X::Steinberg, C::NonSplit(_) | C::NonSplitHalf) => int(-1),

            (X::Principal(_), C::Identity) => int(q + 1),
            (X::Principal(_), C::UnipN | C::UnipNPrime) => int(1),
            (X::Principal(k), C::Split(a)) => eps_pair((a * k) as i64),
            (X::Principal(k), C::SplitHalf) => {
                p.epsilon((q - 1) * k as i64 / 4).scale(&BigInt::from(2))
            }
            (X::Principal(_), C::NonSplit(_) | C::NonSplitHalf) => zero(),

            (X::Discrete(_), C::Identity) => int(q - 1),
            (X::Discrete(_), C::UnipN | C::UnipNPrime) => int(-1),
            (X::Discrete(_), C::Split(_) | C::SplitHalf) => zero(),
            (X::Discrete(j), C::NonSplit(b)) => -&eta_pair((b * j) as i64),
            (X::Discrete(j), C::NonSplitHalf) => {
                p.eta0((q + 1) * j as i64 / 4).scale(&BigInt::from(-2))
            }

            (X::HalfMinus1 | X::HalfMinus2, C::Identity) => int((q - 1) / 2),
            (X::HalfMinus1, C::UnipN) | (X::HalfMinus2, C::UnipNPrime) => -&omega_star,
            (X::HalfMinus1, C::UnipNPrime) | (X::HalfMinus2, C::UnipN) => -&omega,
            (X::HalfMinus1 | X::HalfMinus2, C::Split(_) | C::SplitHalf) => zero(),
            (X::HalfMinus1 | X::HalfMinus2, C::NonSplit(b)) => int(sign(b as i64 + 1)),
            (X::HalfMinus1 | X::HalfMinus2, C::NonSplitHalf) => int(sign((q + 5) / 4)),

            (X::HalfPlus1 | X::HalfPlus2, C::Identity) => int((q + 1) / 2),
            (X::HalfPlus1, C::UnipN) | (X::HalfPlus2, C::UnipNPrime) => omega,
            (X::HalfPlus1, C::UnipNPrime) | (X::HalfPlus2, C::UnipN) => omega_star,
            (X::HalfPlus1 | X::HalfPlus2, C::Split(a)) => int(sign(a as i64)),
            (X::HalfPlus1 | X::HalfPlus2, C::SplitHalf) => int(sign((q - 1) / 4)),
            (X::HalfPlus1 | X::HalfPlus2, C::NonSplit(_) | C::NonSplitHalf) => zero(),
        }
    }
}

/// Character labels in table order.
pub fn character_labels(params: &GroupParams) -> Vec<CharLabel> {
    let mut out = vec![CharLabel::Trivial, CharLabel::Steinberg];
    out.extend(
        params
            .principal_indices()
            .into_iter()
            .map(CharLabel::Principal),
    );
    out.extend(
        params
            .discrete_indices()
            .into_iter()
            .map(CharLabel::Discrete),
    );
    match params.case {
        ParityCase::Even => {}
        ParityCase::ThreeMod4 => out.extend([CharLabel::HalfMinus1, CharLabel::HalfMinus2]),
        ParityCase::OneMod4 => out.extend([CharLabel::HalfPlus1, CharLabel::HalfPlus2]),
    }
    out
}

pub fn degree(params: &GroupParams, label: CharLabel) -> u64 {
    let q = params.q;
    match label {
        CharLabel::Trivial => 1,
        CharLabel::Steinberg => q,
        CharLabel::Principal(_) => q + 1,
        CharLabel::Discrete(_) => q - 1,
        CharLabel::HalfMinus1 | CharLabel::HalfMinus2 => (q - 1) / 2,
        CharLabel::HalfPlus1 | CharLabel::HalfPlus2 => q.div_ceil(2),
    }
}

pub fn character_table(params: &GroupParams) -> CharacterTable {
    let classes = conjugacy_data(params);
    let ctx = ValueContext {
        params,
        omega: omega_values(params).ok(),
    };
    let characters = character_labels(params)
        .into_iter()
        .map(|label| Character {
            label,
            degree: degree(params, label),
            values: classes.iter().map(|c| ctx.value(label, c.label)).collect(),
        })
        .collect();
    CharacterTable {
        params: *params,
        classes,
        characters,
    }
}

/// Classes `g` with `chi(g) conj(chi(g)) = chi(1)^2`.
pub fn center_classes(chi: &Character, table: &CharacterTable) -> Vec<ClassLabel> {
    let deg_sq = BigInt::from(chi.degree).pow(2);
    table
        .classes
        .iter()
        .zip(&chi.values)
        .filter(|(_, v)| (*v * &v.conjugate()).as_integer().as_ref() == Some(&deg_sq))
        .map(|(c, _)| c.label)
        .collect()
}

/// Outcome of the exact table-validity checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableValidity {
    pub row_orthogonality: bool,
    pub column_orthogonality: bool,
    pub degree_sum: bool,
    pub class_size_sum: bool,
    pub class_count: bool,
    pub failures: Vec<String>,
}

impl TableValidity {
    pub fn all_pass(&self) -> bool {
        self.row_orthogonality
            && self.column_orthogonality
            && self.degree_sum
            && self.class_size_sum
            && self.class_count
    }
}

impl CharacterTable {
    pub fn class_index(&self, label: ClassLabel) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn character(&self, label: CharLabel) -> Option<&Character> {
        self.characters.iter().find(|c| c.label == label)
    }

    pub fn require(&self, label: CharLabel) -> Result<&Character> {
        self.character(label)
            .ok_or_else(|| Error::CharacterNotInTable {
                label: label.to_string(),
                q: self.params.q,
            })
    }

    pub fn labels(&self) -> impl Iterator<Item = CharLabel> + '_ {
        self.characters.iter().map(|c| c.label)
    }

    /// `(1/|G|) sum_g |g^G| f(g) conj(h(g))`, asserted to be an integer.
    pub fn inner_product_values(&self, f: &[Cyclotomic], h: &[Cyclotomic]) -> Result<BigInt> {
        assert_eq!(f.len(), self.classes.len(), "class function length");
        assert_eq!(h.len(), self.classes.len(), "class function length");
        let n = self.params.conductor;
        let mut acc = Cyclotomic::zero(n);
        for ((class, fv), hv) in self.classes.iter().zip(f).zip(h) {
            let fv = if fv.conductor() == n {
                fv.clone()
            } else {
                fv.promote(n)
            };
            let hc = hv.conjugate();
            let hc = if hc.conductor() == n {
                hc
            } else {
                hc.promote(n)
            };
            acc.add_scaled_product(&fv, &hc, &BigInt::from(class.size));
        }
        let total = acc
            .as_integer()
            .ok_or_else(|| Error::IntegralityViolation {
                detail: format!("weighted class sum {acc} is not a rational integer"),
            })?;
        let (quot, rem) = total.div_rem(&BigInt::from(self.params.order));
        if !rem.is_zero() {
            return Err(Error::IntegralityViolation {
                detail: format!("{total} is not divisible by |G| = {}", self.params.order),
            });
        }
        Ok(quot)
    }

    pub fn validate(&self) -> TableValidity {
        let mut v = TableValidity {
            row_orthogonality: true,
            column_orthogonality: true,
            degree_sum: true,
            class_size_sum: true,
            class_count: true,
            failures: Vec::new(),
        };
        let order = self.params.order;
        let count = self.params.class_count();
        if self.classes.len() != count || self.characters.len() != count {
            v.class_count = false;
            v.failures.push(format!(
                "expected {count} classes and characters, got {} and {}",
                self.classes.len(),
                self.characters.len()
            ));
        }
        let size_sum: u64 = self.classes.iter().map(|c| c.size).sum();
        if size_sum != order || self.classes.iter().any(|c| !order.is_multiple_of(c.size)) {
            v.class_size_sum = false;
            v.failures
                .push(format!("class sizes sum to {size_sum}, |G| = {order}"));
        }
        let deg_sum: u64 = self.characters.iter().map(|c| c.degree * c.degree).sum();
        if deg_sum != order {
            v.degree_sum = false;
            v.failures
                .push(format!("sum of squared degrees {deg_sum} != {order}"));
        }
        for chi in &self.characters {
            if chi.values[0].as_integer() != Some(BigInt::from(chi.degree)) {
                v.row_orthogonality = false;
                v.failures
                    .push(format!("{}(1) != degree {}", chi.label, chi.degree));
            }
        }
        for (i, a) in self.characters.iter().enumerate() {
            for b in &self.characters[i..] {
                let expect = BigInt::from(u8::from(a.label == b.label));
                match self.inner_product_values(&a.values, &b.values) {
                    Ok(x) if x == expect => {}
                    other => {
                        v.row_orthogonality = false;
                        v.failures
                            .push(format!("<{}, {}> = {other:?}", a.label, b.label));
                    }
                }
            }
        }
        let n = self.params.conductor;
        for (g, cg) in self.classes.iter().enumerate() {
            for (h, ch) in self.classes.iter().enumerate().skip(g) {
                let mut acc = Cyclotomic::zero(n);
                for chi in &self.characters {
                    acc.add_scaled_product(
                        &chi.values[g],
                        &chi.values[h].conjugate(),
                        &BigInt::one(),
                    );
                }
                let expect = if g == h {
                    BigInt::from(order / cg.size)
                } else {
                    BigInt::zero()
                };
                if acc.as_integer() != Some(expect.clone()) {
                    v.column_orthogonality = false;
                    v.failures.push(format!(
                        "column sum at ({}, {}) is {acc}, expected {expect}",
                        cg.label, ch.label
                    ));
                }
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_examples() {
        let p8 = group_params(8).unwrap();
        assert_eq!(
            (p8.p, p8.m, p8.case, p8.order),
            (2, 3, ParityCase::Even, 504)
        );
        assert_eq!(p8.conductor, 63);
        let p11 = group_params(11).unwrap();
        assert_eq!((p11.case, p11.order), (ParityCase::ThreeMod4, 660));
        assert_eq!(p11.conductor, 660);
        assert_eq!(group_params(13).unwrap().case, ParityCase::OneMod4);
        assert_eq!(group_params(12), Err(Error::NotAPrimePower(12)));
        assert_eq!(group_params(3), Err(Error::NotAPrimePower(3)));
        assert_eq!(group_params(1), Err(Error::NotAPrimePower(1)));
    }

    fn sizes(q: u64) -> Vec<u64> {
        conjugacy_data(&group_params(q).unwrap())
            .iter()
            .map(|c| c.size)
            .collect()
    }

    #[test]
    fn class_sizes_follow_tables() {
        assert_eq!(sizes(8), vec![1, 63, 72, 72, 72, 56, 56, 56, 56]);
        assert_eq!(sizes(11), vec![1, 60, 60, 132, 132, 110, 110, 55]);
        // two S(a) classes of size 182 for q = 13, (q + 5) / 2 = 9 classes in all
        assert_eq!(sizes(13), vec![1, 84, 84, 182, 182, 91, 156, 156, 156]);
        assert_eq!(sizes(13).iter().sum::<u64>(), 1092);
    }

    #[test]
    fn omega_for_square_q() {
        let p = group_params(9).unwrap();
        let (w, ws) = omega_values(&p).unwrap();
        assert_eq!(w.as_integer(), Some(BigInt::from(2)));
        assert_eq!(ws.as_integer(), Some(BigInt::from(-1)));
    }

    #[test]
    fn omega_relations() {
        for q in [5u64, 7, 11, 13, 25, 27, 29, 31, 125] {
            let p = group_params(q).unwrap();
            let (w, ws) = omega_values(&p).unwrap();
            assert_eq!((&w + &ws).as_integer(), Some(BigInt::one()), "q = {q}");
            let qi = q as i64;
            let prod = if p.case == ParityCase::OneMod4 {
                (1 - qi) / 4
            } else {
                (1 + qi) / 4
            };
            assert_eq!((&w * &ws).as_integer(), Some(BigInt::from(prod)), "q = {q}");
        }
        let p11 = group_params(11).unwrap();
        let (w, ws) = omega_values(&p11).unwrap();
        assert_eq!((&w * &ws).as_integer(), Some(BigInt::from(3)));
        assert!(omega_values(&group_params(8).unwrap()).is_err());
    }

    #[test]
    fn sqrt5_from_gauss_sum() {
        let g = gauss_sum(5, 5);
        let expect = Cyclotomic::from_terms(
            5,
            [(1, 1), (2, -1), (3, -1), (4, 1)].map(|(e, c)| (e, BigInt::from(c))),
        )
        .unwrap();
        assert_eq!(g, expect);
        assert!((g.approx().0 - 2.236_067_977_499_79).abs() < 1e-10);
    }

    #[test]
    fn value_examples() {
        let t8 = character_table(&group_params(8).unwrap());
        let st = t8.require(CharLabel::Steinberg).unwrap();
        for (c, v) in t8.classes.iter().zip(&st.values) {
            match c.label {
                ClassLabel::Split(_) => assert_eq!(v.as_integer(), Some(BigInt::one())),
                ClassLabel::NonSplit(_) => assert_eq!(v.as_integer(), Some(BigInt::from(-1))),
                _ => {}
            }
        }

        let t11 = character_table(&group_params(11).unwrap());
        let half = t11.class_index(ClassLabel::NonSplitHalf).unwrap();
        for j in [2i64, 4] {
            let chi = t11.require(CharLabel::Discrete(j as u64)).unwrap();
            let expect = -2 * if (j / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(chi.values[half].as_integer(), Some(BigInt::from(expect)));
        }

        let t13 = character_table(&group_params(13).unwrap());
        let (w, _) = omega_values(&t13.params).unwrap();
        let hp = t13.require(CharLabel::HalfPlus1).unwrap();
        assert_eq!(hp.values[0].as_integer(), Some(BigInt::from(7)));
        assert_eq!(hp.values[1], w);
    }

    #[test]
    fn centers_are_trivial() {
        let t8 = character_table(&group_params(8).unwrap());
        assert_eq!(
            center_classes(&t8.characters[0], &t8).len(),
            t8.classes.len()
        );
        assert_eq!(
            center_classes(t8.require(CharLabel::Steinberg).unwrap(), &t8),
            vec![ClassLabel::Identity]
        );
        let t13 = character_table(&group_params(13).unwrap());
        assert_eq!(
            center_classes(t13.require(CharLabel::HalfPlus1).unwrap(), &t13),
            vec![ClassLabel::Identity]
        );
    }

    #[test]
    fn small_tables_validate() {
        for q in [4u64, 5, 7, 8, 9, 11, 13] {
            let t = character_table(&group_params(q).unwrap());
            let v = t.validate();
            assert!(v.all_pass(), "q = {q}: {:?}", v.failures);
        }
    }

    #[test]
    fn label_grammar() {
        for s in [
            "triv", "st", "pp:4", "dd:12", "half+:1", "half+:2", "half-:1", "half-:2",
        ] {
            assert_eq!(s.parse::<CharLabel>().unwrap().to_string(), s);
        }
        for s in [
            "", "pp", "pp:", "pp:-1", "pp:+2", "half+:3", "dd:1x", "xx:1", "ST",
        ] {
            assert!(s.parse::<CharLabel>().is_err(), "{s}");
        }
        for s in ["I", "N", "N'", "S(3)", "S(half)", "T(1)", "T(half)"] {
            assert_eq!(s.parse::<ClassLabel>().unwrap().to_string(), s);
        }
        assert!("S()".parse::<ClassLabel>().is_err());
    }
}
