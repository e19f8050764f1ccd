//! Finite fields `GF(q)` with `q` small enough for full operation tables,
//! and the quadratic extension `GF(q^2)` built on top.

use crate::error::{Error, Result};
use crate::numtheory::{factorize, prime_power};

/// Field elements are indices `0..q`. Index `i = sum c_k p^k` is the
/// polynomial `sum c_k x^k` reduced modulo [`FieldSpec::modulus`].
pub type Elem = u32;

#[derive(Debug, Clone)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    /// Monic, low degree first, length `m + 1`.
    pub modulus: Vec<u64>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

fn digits(mut i: u64, p: u64, m: u32) -> Vec<u64> {
    (0..m)
        .map(|_| {
            let d = i % p;
            i /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic `b`, both low degree first.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - db;
            for (k, &c) in b[..db].iter().enumerate() {
                r[shift + k] = (r[shift + k] + (p - c) * lead) % p;
            }
        }
    }
    r.resize(db, 0);
    r
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Monic polynomials of degree `d`, in increasing index order.
fn monic(d: u32, p: u64) -> impl Iterator<Item = Vec<u64>> {
    (0..p.pow(d)).map(move |i| {
        let mut v = digits(i, p, d);
        v.push(1);
        v
    })
}

/// No monic factor of degree `1..=deg/2`. Exhaustive trial division, fine for
/// the degrees an explicit group can afford.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = (f.len() - 1) as u32;
    (1..=deg / 2).all(|d| monic(d, p).all(|g| poly_rem(f, &g, p).iter().any(|&c| c != 0)))
}

impl FieldSpec {
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            monic(m, p)
                .find(|f| is_irreducible(f, p))
                .expect("irreducible polynomials exist")
        };
        let qs = q as usize;
        let vecs: Vec<Vec<u64>> = (0..q).map(|i| digits(i, p, m)).collect();
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for i in 0..qs {
            for j in 0..qs {
                let s: Vec<u64> = vecs[i]
                    .iter()
                    .zip(&vecs[j])
                    .map(|(a, b)| (a + b) % p)
                    .collect();
                add[i * qs + j] = undigits(&s, p) as Elem;
                let prod = if m == 1 {
                    vec![vecs[i][0] * vecs[j][0] % p]
                } else {
                    poly_rem(&poly_mul(&vecs[i], &vecs[j], p), &modulus, p)
                };
                mul[i * qs + j] = undigits(&prod, p) as Elem;
            }
        }
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for i in 0..qs {
            for j in 0..qs {
                if add[i * qs + j] == 0 {
                    neg[i] = j as Elem;
                }
                if mul[i * qs + j] == 1 {
                    inv[i] = j as Elem;
                }
            }
        }
        Ok(FieldSpec {
            p,
            m,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The image of `x` in the field; `1` for a prime field.
    pub fn theta(&self) -> Elem {
        if self.m == 1 {
            1
        } else {
            self.p as Elem
        }
    }

    /// `1, theta, ..., theta^(m-1)`, an additive basis over `GF(p)`.
    pub fn additive_basis(&self) -> Vec<Elem> {
        (0..self.m)
            .map(|k| self.pow(self.theta(), k as u64))
            .collect()
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a == 0 || self.elements().any(|x| self.mul(x, x) == a)
    }

    /// First non-square in index order; `None` in characteristic 2.
    pub fn first_non_square(&self) -> Option<Elem> {
        self.elements().find(|&a| !self.is_square(a))
    }
}

/// `GF(q^2) = GF(q)[y] / (y^2 + b y + c)`, elements as pairs `(u, v) = u + v y`.
#[derive(Debug, Clone)]
pub struct ExtFieldSpec {
    pub base: FieldSpec,
    /// `(b, c)` for the modulus `y^2 + b y + c`.
    pub modulus: (Elem, Elem),
    pub tau: (Elem, Elem),
    pub sigma: (Elem, Elem),
    pub tau0: (Elem, Elem),
}

pub type ExtElem = (Elem, Elem);

impl ExtFieldSpec {
    pub fn new(base: FieldSpec) -> Self {
        let q = base.q as Elem;
        let modulus = (0..q * q)
            .map(|i| (i / q, i % q))
            .find(|&(b, c)| {
                base.elements()
                    .all(|y| base.add(base.add(base.mul(y, y), base.mul(b, y)), c) != 0)
            })
            .expect("irreducible quadratic exists");
        let mut ext = ExtFieldSpec {
            base,
            modulus,
            tau: (0, 0),
            sigma: (0, 0),
            tau0: (0, 0),
        };
        let qq = ext.base.q;
        let order = qq * qq - 1;
        ext.tau = (1..q * q)
            .map(|i| (i % q, i / q))
            .find(|&x| ext.order(x) == order)
            .expect("multiplicative group is cyclic");
        ext.sigma = ext.pow(ext.tau, qq + 1);
        ext.tau0 = ext.pow(ext.tau, qq - 1);
        ext
    }

    pub fn one(&self) -> ExtElem {
        (1, 0)
    }

    pub fn add(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        (self.base.add(x.0, y.0), self.base.add(x.1, y.1))
    }

    pub fn mul(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        let f = &self.base;
        let (b, c) = self.modulus;
        let lo = f.mul(x.0, y.0);
        let mid = f.add(f.mul(x.0, y.1), f.mul(x.1, y.0));
        let hi = f.mul(x.1, y.1);
        // y^2 = -b y - c
        (f.sub(lo, f.mul(hi, c)), f.sub(mid, f.mul(hi, b)))
    }

    pub fn pow(&self, x: ExtElem, mut e: u64) -> ExtElem {
        let (mut base, mut acc) = (x, self.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: ExtElem) -> u64 {
        let q = self.base.q;
        let mut n = q * q - 1;
        for (prime, _) in factorize(n) {
            while n.is_multiple_of(prime) && self.pow(x, n / prime) == self.one() {
                n /= prime;
            }
        }
        n
    }

    /// Embeds a base element; `None` if `x` is not in the base field.
    pub fn to_base(&self, x: ExtElem) -> Option<Elem> {
        (x.1 == 0).then_some(x.0)
    }

    /// `sigma^a`, an element of the base field.
    pub fn sigma_pow(&self, a: i64) -> Elem {
        let n = (self.base.q - 1) as i64;
        let x = self.pow(self.sigma, a.rem_euclid(n) as u64);
        self.to_base(x).expect("sigma lies in the base field")
    }

    /// `tau0^b + tau0^(bq)`, the trace of `tau0^b`, an element of the base field.
    pub fn trace_tau0(&self, b: u64) -> Elem {
        let x = self.pow(self.tau0, b);
        let s = self.add(x, self.pow(x, self.base.q));
        self.to_base(s).expect("trace lies in the base field")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_moduli() {
        assert_eq!(FieldSpec::new(8).unwrap().modulus, vec![1, 1, 0, 1]);
        assert_eq!(FieldSpec::new(9).unwrap().modulus, vec![1, 0, 1]);
        assert_eq!(FieldSpec::new(7).unwrap().modulus, vec![0, 1]);
        assert_eq!(FieldSpec::new(4).unwrap().modulus, vec![1, 1, 1]);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(FieldSpec::new(12).unwrap_err(), Error::NotAPrimePower(12));
    }

    #[test]
    fn field_axioms() {
        for q in [4, 7, 8, 9, 16, 25, 27] {
            let f = FieldSpec::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                    assert_eq!(f.pow(a, q - 1), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let c = f.theta();
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn extension_orders() {
        let e = ExtFieldSpec::new(FieldSpec::new(8).unwrap());
        assert_eq!(e.order(e.tau), 63);
        assert_eq!(e.order(e.sigma), 7);
        assert_eq!(e.order(e.tau0), 9);
        let e = ExtFieldSpec::new(FieldSpec::new(11).unwrap());
        assert_eq!(e.order(e.tau0), 12);
        let e = ExtFieldSpec::new(FieldSpec::new(9).unwrap());
        for b in 1..=4 {
            e.trace_tau0(b);
        }
    }

    #[test]
    fn non_squares() {
        assert_eq!(FieldSpec::new(8).unwrap().first_non_square(), None);
        assert_eq!(FieldSpec::new(7).unwrap().first_non_square(), Some(3));
        assert_eq!(FieldSpec::new(5).unwrap().first_non_square(), Some(2));
    }
}
