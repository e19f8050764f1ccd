//! Exact arithmetic in `Z[zeta_n]`.
//!
//! Elements are stored as sparse maps `exponent -> coefficient` in
//! `Z[x]/(x^n - 1)`. This representation is not unique: `1 + zeta_5 + ... +
//! zeta_5^4` and `0` are the same element. Comparison and integrality tests
//! go through a canonical form.
//!
//! The canonical form uses the tensor decomposition
//! `Z[zeta_n] = Z[zeta_{p1^k1}] (x) ... (x) Z[zeta_{ps^ks}]`: an exponent `e`
//! is split into its residues `e mod pi^ki`, each residue is reduced modulo
//! `Phi_{pi^ki}` (whose relation only ever needs one step), and the pieces are
//! recombined with the CRT. The resulting exponents index a Z-basis of
//! `Z[zeta_n]`, so two elements are equal iff their canonical maps agree,
//! and an element is a rational integer iff only exponent 0 survives.
//! This agrees with reduction modulo `Phi_n` (see [`Cyclotomic::reduce_mod_phi`])
//! but never touches a dense polynomial of degree `phi(n)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, euler_phi, factorize, gcd, lcm};

/// The `n`-th cyclotomic polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPolynomial {
    pub n: u64,
    pub coefficients: Vec<BigInt>,
}

impl CyclotomicPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// Divides `num` by the monic polynomial `den` and returns `(quotient, remainder)`.
fn poly_divrem(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![BigInt::zero()], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for top in (dd..rem.len()).rev() {
        let c = std::mem::take(&mut rem[top]);
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate().take(dd) {
            rem[top - dd + i] -= &c * d;
        }
        quot[top - dd] = c;
    }
    rem.truncate(dd);
    (quot, rem)
}

/// Computes `Phi_n` by dividing `x^n - 1` by `Phi_d` for every proper divisor `d`.
///
/// Every division is checked to be exact.
pub fn cyclotomic_polynomial(n: u64) -> CyclotomicPolynomial {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    let mut known: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for d in divisors(n) {
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = BigInt::from(-1);
        poly[d as usize] = BigInt::one();
        for (_, phi_e) in known.iter().filter(|(e, _)| d % **e == 0) {
            let (q, r) = poly_divrem(&poly, phi_e);
            assert!(r.iter().all(Zero::is_zero), "Phi_{d} division not exact");
            poly = q;
        }
        known.insert(d, poly);
    }
    CyclotomicPolynomial {
        n,
        coefficients: known.remove(&n).expect("n divides itself"),
    }
}

#[derive(Debug)]
struct PrimePowerFactor {
    p: u64,
    /// `p^k`
    modulus: u64,
    /// `p^(k-1)`
    step: u64,
    /// `phi(p^k) = (p - 1) p^(k-1)`
    phi: u64,
    /// CRT idempotent: `1 mod p^k`, `0 mod n / p^k`.
    idempotent: u64,
}

#[derive(Debug)]
struct ConductorBasis {
    n: u64,
    factors: Vec<PrimePowerFactor>,
}

impl ConductorBasis {
    fn new(n: u64) -> Self {
        let factors = factorize(n)
            .into_iter()
            .map(|(p, k)| {
                let modulus = p.pow(k);
                let cofactor = n / modulus;
                // cofactor * inv(cofactor mod p^k)
                let inv = (1..=modulus)
                    .find(|x| (cofactor % modulus) * x % modulus == 1 % modulus)
                    .expect("cofactor is a unit mod p^k");
                PrimePowerFactor {
                    p,
                    modulus,
                    step: modulus / p,
                    phi: modulus / p * (p - 1),
                    idempotent: ((cofactor as u128 * inv as u128) % n as u128) as u64,
                }
            })
            .collect();
        ConductorBasis { n, factors }
    }

    /// Expresses `zeta_n^e` in the tensor basis.
    fn expand(&self, e: u64) -> Vec<(u64, bool)> {
        let mut acc: Vec<(u64, bool)> = vec![(0, false)];
        for f in &self.factors {
            let r = e % f.modulus;
            let pieces: Vec<(u64, bool)> = if r < f.phi {
                vec![(r, false)]
            } else {
                let base = r - f.phi;
                (0..f.p - 1).map(|j| (base + j * f.step, true)).collect()
            };
            if pieces.len() == 1 {
                let (r0, neg) = pieces[0];
                let shift = mul_mod(r0, f.idempotent, self.n);
                for term in acc.iter_mut() {
                    term.0 = (term.0 + shift) % self.n;
                    term.1 ^= neg;
                }
            } else {
                let mut next = Vec::with_capacity(acc.len() * pieces.len());
                for &(e0, s0) in &acc {
                    for &(r0, s1) in &pieces {
                        let shift = mul_mod(r0, f.idempotent, self.n);
                        next.push(((e0 + shift) % self.n, s0 ^ s1));
                    }
                }
                acc = next;
            }
        }
        acc
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn basis_for(n: u64) -> Arc<ConductorBasis> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ConductorBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("basis cache poisoned").get(&n) {
        return Arc::clone(b);
    }
    let basis = Arc::new(ConductorBasis::new(n));
    cache
        .lock()
        .expect("basis cache poisoned")
        .entry(n)
        .or_insert(basis)
        .clone()
}

/// An element of `Z[zeta_n]`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    terms: BTreeMap<u64, BigInt>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Cyclotomic {
            conductor,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_int(conductor: u64, value: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(conductor);
        z.add_term(0, value.into());
        z
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_int(conductor, 1)
    }

    /// `zeta_n^(k mod n)`.
    pub fn root(n: u64, k: i64) -> Self {
        let mut z = Self::zero(n);
        z.add_term(k.rem_euclid(n as i64) as u64, BigInt::one());
        z
    }

    /// Builds an element from explicit `(exponent, coefficient)` pairs.
    /// Repeated exponents accumulate.
    pub fn from_terms<I>(conductor: u64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, BigInt)>,
    {
        if conductor == 0 {
            return Err(Error::InvalidCyclotomic(
                "conductor must be positive".into(),
            ));
        }
        let mut z = Self::zero(conductor);
        for (e, c) in terms {
            if e >= conductor {
                return Err(Error::InvalidCyclotomic(format!(
                    "exponent {e} out of range for conductor {conductor}"
                )));
            }
            z.add_term(e, c);
        }
        Ok(z)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Stored terms in increasing exponent order (not canonicalized).
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Re-embeds into conductor `m` (a multiple of the current one) via
    /// `zeta_n = zeta_m^(m/n)`.
    pub fn promote(&self, m: u64) -> Self {
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot promote conductor {} to {m}",
            self.conductor
        );
        let scale = m / self.conductor;
        Cyclotomic {
            conductor: m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * scale, c.clone()))
                .collect(),
        }
    }

    fn aligned<'a>(
        a: &'a Self,
        b: &'a Self,
    ) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if a.conductor == b.conductor {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let m = lcm(a.conductor, b.conductor);
            (Cow::Owned(a.promote(m)), Cow::Owned(b.promote(m)))
        }
    }

    /// `self += scale * a * b`, all in the conductor of `self`.
    pub fn add_scaled_product(&mut self, a: &Self, b: &Self, scale: &BigInt) {
        assert!(
            a.conductor == self.conductor && b.conductor == self.conductor,
            "add_scaled_product requires a common conductor"
        );
        let n = self.conductor;
        for (ea, ca) in &a.terms {
            let sa = ca * scale;
            for (eb, cb) in &b.terms {
                let mut e = ea + eb;
                if e >= n {
                    e -= n;
                }
                self.add_term(e, &sa * cb);
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.conductor);
        }
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, t: u32) -> Self {
        let mut acc = Self::one(self.conductor);
        for _ in 0..t {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugation: `zeta^e -> zeta^(n-e)`.
    pub fn conjugate(&self) -> Self {
        let n = self.conductor;
        Cyclotomic {
            conductor: n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((n - e) % n, c.clone()))
                .collect(),
        }
    }

    /// Canonical representative in the tensor basis described in the module docs.
    pub fn canonical(&self) -> Self {
        let basis = basis_for(self.conductor);
        let mut out = Self::zero(self.conductor);
        for (e, c) in &self.terms {
            for (e2, neg) in basis.expand(*e) {
                out.add_term(e2, if neg { -c } else { c.clone() });
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.canonical().terms.is_empty()
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&0) {
                return Some(c.clone());
            }
        }
        let canon = self.canonical();
        match canon.terms.len() {
            0 => Some(BigInt::zero()),
            1 => canon.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Coefficients of the remainder modulo `Phi_n` in the power basis
    /// `1, zeta, ..., zeta^(phi(n)-1)`.
    ///
    /// Dense in `n`; meant for small conductors and for cross-checking
    /// [`Cyclotomic::canonical`].
    pub fn reduce_mod_phi(&self) -> Vec<BigInt> {
        let phi = cyclotomic_polynomial(self.conductor);
        let mut dense = vec![BigInt::zero(); self.conductor as usize];
        for (e, c) in &self.terms {
            dense[*e as usize] += c;
        }
        let (_, mut rem) = poly_divrem(&dense, &phi.coefficients);
        rem.resize(euler_phi(self.conductor) as usize, BigInt::zero());
        rem
    }

    /// Floating-point value `(re, im)` under `zeta_n = exp(2 pi i / n)`.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (e, c)| {
            let theta = std::f64::consts::TAU * (*e as f64) / n;
            let c = c.to_f64().unwrap_or(f64::NAN);
            (re + c * theta.cos(), im + c * theta.sin())
        })
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; {})", self.conductor, self)
    }
}

/// GAP-style rendering, `E(n)^e` with each root written in its own order.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let g = gcd(*e, self.conductor);
            let (order, exp) = (self.conductor / g, e / g);
            let root = match (order, exp) {
                (1, _) => String::new(),
                (_, 1) => format!("E({order})"),
                _ => format!("E({order})^{exp}"),
            };
            let mag = c.abs();
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let body = match (root.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => root,
                (false, false) => format!("{mag}*{root}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::aligned(self, rhs);
        let mut out = a.into_owned();
        for (e, c) in &b.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::aligned(self, rhs);
        let mut out = a.into_owned();
        for (e, c) in &b.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::aligned(self, rhs);
        let mut out = Cyclotomic::zero(a.conductor);
        out.add_scaled_product(&a, &b, &BigInt::one());
        out
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(&BigInt::from(-1))
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if rhs.conductor == self.conductor {
            for (e, c) in &rhs.terms {
                self.add_term(*e, c.clone());
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sqrt5() -> Cyclotomic {
        Cyclotomic::from_terms(
            5,
            [(1, 1), (2, -1), (3, -1), (4, 1)].map(|(e, c)| (e, BigInt::from(c))),
        )
        .unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).coefficients, ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4).coefficients, ints(&[1, 0, 1]));
        // (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1))
        assert_eq!(cyclotomic_polynomial(6).coefficients, ints(&[1, -1, 1]));
        // first polynomial with a coefficient outside {-1, 0, 1}
        let phi105 = cyclotomic_polynomial(105);
        assert_eq!(phi105.degree(), 48);
        assert_eq!(phi105.coefficients[7], BigInt::from(-2));
    }

    #[test]
    fn roots_wrap() {
        assert!(Cyclotomic::root(5, 0) == Cyclotomic::one(5));
        assert_eq!(
            Cyclotomic::root(5, 7).terms().collect::<Vec<_>>(),
            vec![(2, &BigInt::one())]
        );
        assert_eq!(
            Cyclotomic::root(7, -1).terms().collect::<Vec<_>>(),
            vec![(6, &BigInt::one())]
        );
    }

    #[test]
    fn ring_relations() {
        let i = Cyclotomic::root(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_int(4, -1));
        let s = (1..5).fold(Cyclotomic::zero(5), |acc, k| acc + Cyclotomic::root(5, k));
        assert_eq!(s, Cyclotomic::from_int(5, -1));
        assert_eq!(
            (&s + &Cyclotomic::from_int(5, 3)).as_integer(),
            Some(BigInt::from(2))
        );
    }

    #[test]
    fn gauss_sum_for_five_squares_to_five() {
        let g = sqrt5();
        let (re, im) = g.approx();
        assert!((re - 5f64.sqrt()).abs() < 1e-12 && im.abs() < 1e-12);
        let sq = &g * &g;
        assert_eq!(sq.as_integer(), Some(BigInt::from(5)));
        let (re, _) = sq.approx();
        assert!((re - 5.0).abs() < 1e-10);
    }

    #[test]
    fn conjugation() {
        assert_eq!(
            Cyclotomic::root(8, 1).conjugate().terms().next().unwrap().0,
            7
        );
        let five = Cyclotomic::from_int(9, 5);
        assert_eq!(five.conjugate(), five);
        let real = Cyclotomic::root(5, 1) + Cyclotomic::root(5, 4);
        assert_eq!(real.conjugate(), real);
    }

    #[test]
    fn non_integers_are_reported() {
        assert_eq!(Cyclotomic::root(7, 1).as_integer(), None);
        assert_eq!(sqrt5().as_integer(), None);
    }

    #[test]
    fn mixed_conductors_promote() {
        let a = Cyclotomic::root(3, 1);
        let b = Cyclotomic::root(4, 1);
        let prod = &a * &b;
        assert_eq!(prod.conductor(), 12);
        assert_eq!(prod, Cyclotomic::root(12, 7));
        assert_eq!(&a + &Cyclotomic::root(3, 2), Cyclotomic::from_int(12, -1));
    }

    #[test]
    fn rejects_bad_terms() {
        assert!(Cyclotomic::from_terms(0, []).is_err());
        assert!(Cyclotomic::from_terms(5, [(5, BigInt::one())]).is_err());
    }

    #[test]
    fn display_is_gap_like() {
        let x = Cyclotomic::root(12, 3) - Cyclotomic::root(12, 4);
        assert_eq!(x.to_string(), "E(4)-E(3)");
        assert_eq!(
            (Cyclotomic::root(5, 1) + Cyclotomic::root(5, 4))
                .scale(&BigInt::from(2))
                .to_string(),
            "2*E(5)+2*E(5)^4"
        );
        assert_eq!(Cyclotomic::from_int(7, -3).to_string(), "-3");
    }
}
