//! `PSL_2(q)` as explicit 2x2 matrices modulo `+-I`.

use std::collections::VecDeque;

use super::field::{Elem, FieldSpec};

/// Row-major `[[a, b], [c, d]]`, entries are field indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMatrix(pub [Elem; 4]);

impl ProjMatrix {
    pub fn new(f: &FieldSpec, m: [Elem; 4]) -> Self {
        ProjMatrix(m).canonical(f)
    }

    pub fn identity() -> Self {
        ProjMatrix([1, 0, 0, 1])
    }

    pub fn det(&self, f: &FieldSpec) -> Elem {
        let [a, b, c, d] = self.0;
        f.sub(f.mul(a, d), f.mul(b, c))
    }

    pub fn trace(&self, f: &FieldSpec) -> Elem {
        f.add(self.0[0], self.0[3])
    }

    /// The smaller trace of the `+-` pair.
    pub fn trace_up_to_sign(&self, f: &FieldSpec) -> Elem {
        let t = self.trace(f);
        t.min(f.neg(t))
    }

    pub fn negate(&self, f: &FieldSpec) -> Self {
        ProjMatrix(self.0.map(|x| f.neg(x)))
    }

    /// The lexicographically smaller of `M` and `-M`.
    pub fn canonical(self, f: &FieldSpec) -> Self {
        self.min(self.negate(f))
    }

    pub fn mul(&self, f: &FieldSpec, o: &Self) -> Self {
        let [a, b, c, d] = self.0;
        let [e, g, h, k] = o.0;
        let m = [
            f.add(f.mul(a, e), f.mul(b, h)),
            f.add(f.mul(a, g), f.mul(b, k)),
            f.add(f.mul(c, e), f.mul(d, h)),
            f.add(f.mul(c, g), f.mul(d, k)),
        ];
        ProjMatrix(m).canonical(f)
    }

    /// Inverse of a determinant one matrix.
    pub fn inverse(&self, f: &FieldSpec) -> Self {
        let [a, b, c, d] = self.0;
        ProjMatrix([d, f.neg(b), f.neg(c), a]).canonical(f)
    }

    pub fn conjugate_by(&self, f: &FieldSpec, g: &Self) -> Self {
        g.mul(f, self).mul(f, &g.inverse(f))
    }

    pub fn order(&self, f: &FieldSpec) -> u64 {
        let id = ProjMatrix::identity().canonical(f);
        let mut x = *self;
        let mut n = 1;
        while x != id {
            x = x.mul(f, self);
            n += 1;
        }
        n
    }

    pub fn dense_id(&self, q: u64) -> usize {
        let [a, b, c, d] = self.0.map(u64::from);
        (a + q * (b + q * (c + q * d))) as usize
    }
}

/// All canonical elements of `PSL_2(q)`.
pub fn enumerate(f: &FieldSpec) -> Vec<ProjMatrix> {
    let q = f.q as usize;
    let mut seen = vec![false; q.pow(4)];
    let mut out = Vec::new();
    let mut push = |m: [Elem; 4]| {
        let m = ProjMatrix::new(f, m);
        let id = m.dense_id(f.q);
        if !seen[id] {
            seen[id] = true;
            out.push(m);
        }
    };
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                if a != 0 {
                    let d = f.mul(f.add(1, f.mul(b, c)), f.inv(a));
                    push([a, b, c, d]);
                } else if b != 0 && c == f.neg(f.inv(b)) {
                    for d in f.elements() {
                        push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Unipotent `[[1, theta^i], [0, 1]]` for an additive basis, plus `[[0, 1], [-1, 0]]`.
pub fn generators(f: &FieldSpec) -> Vec<ProjMatrix> {
    let mut gens: Vec<_> = f
        .additive_basis()
        .into_iter()
        .map(|x| ProjMatrix::new(f, [1, x, 0, 1]))
        .collect();
    gens.push(ProjMatrix::new(f, [0, 1, f.neg(1), 0]));
    gens
}

/// Conjugacy classes as orbits, plus a dense element-to-class map.
pub fn conjugacy_orbits(
    f: &FieldSpec,
    elements: &[ProjMatrix],
) -> (Vec<Vec<ProjMatrix>>, Vec<u32>) {
    let gens = generators(f);
    let mut class_of = vec![u32::MAX; (f.q as usize).pow(4)];
    let mut orbits = Vec::new();
    for &start in elements {
        if class_of[start.dense_id(f.q)] != u32::MAX {
            continue;
        }
        let idx = orbits.len() as u32;
        let mut orbit = vec![start];
        let mut queue = VecDeque::from([start]);
        class_of[start.dense_id(f.q)] = idx;
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.conjugate_by(f, g);
                let slot = &mut class_of[y.dense_id(f.q)];
                if *slot == u32::MAX {
                    *slot = idx;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbits.push(orbit);
    }
    (orbits, class_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_is_sign_blind() {
        let f = FieldSpec::new(7).unwrap();
        let m = ProjMatrix([2, 3, 1, 5]);
        assert_eq!(m.canonical(&f), m.negate(&f).canonical(&f));
    }

    #[test]
    fn group_orders() {
        for (q, n) in [(4, 60), (5, 60), (7, 168), (8, 504), (9, 360)] {
            let f = FieldSpec::new(q).unwrap();
            let g = enumerate(&f);
            assert_eq!(g.len(), n, "q = {q}");
            assert!(g.iter().all(|m| m.det(&f) == 1));
        }
    }

    #[test]
    fn a5_class_sizes() {
        let f = FieldSpec::new(5).unwrap();
        let (orbits, _) = conjugacy_orbits(&f, &enumerate(&f));
        let mut sizes: Vec<_> = orbits.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }
}
