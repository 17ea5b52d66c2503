use crate::homalg::Matrix;
use crate::scalar::Scalar;

use super::algebra::GAlgebra;
use super::forms::OmegaForms;
use super::CyclicError;

/// The generalized trace `Ω^n(A ⊗ K_G) → Ω^n(A)` in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct TraceMap<S> {
    pub stabilized: OmegaForms<S>,
    pub plain: OmegaForms<S>,
    pub maps: Vec<Matrix<S>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub top: usize,
    pub commutes_with_b: bool,
    pub commutes_with_big_b: bool,
    pub commutes_with_t: bool,
    pub equivariant: bool,
    pub surjective_in_degree_zero: bool,
}

impl TraceReport {
    pub fn holds(&self) -> bool {
        self.commutes_with_b && self.commutes_with_big_b && self.commutes_with_t && self.equivariant && self.surjective_in_degree_zero
    }
}

impl<S: Scalar> TraceMap<S> {
    pub fn new(a: &GAlgebra<S>, top: usize, budget: usize) -> Result<Self, CyclicError> {
        let group = a.group();
        let k = GAlgebra::compact_operators(group);
        let ak = GAlgebra::tensor(a, &k)?;
        let stabilized = OmegaForms::new(&ak, top, budget)?;
        let plain = OmegaForms::new(a, top, budget)?;
        let m = group.order();
        let mm = m * m;
        // basis element of A ⊗ K_G as (x, p, q)
        let split = |i: usize| (i / mm, (i % mm) / m, i % m);
        let maps = (0..=top)
            .map(|n| {
                let mut trip = Vec::new();
                for idx in 0..stabilized.dim(n) {
                    let (t, a0, rest) = stabilized.decode(n, idx);
                    let mut xs = Vec::with_capacity(n + 1);
                    let unit = n > 0 && a0 == 0;
                    if !unit {
                        xs.push(split(if n == 0 { a0 } else { a0 - 1 }));
                    }
                    xs.extend(rest.iter().map(|&i| split(i)));
                    // the matrix units must chain, closing up through t
                    let chained = xs.windows(2).all(|w| w[0].2 == w[1].1);
                    let closed = xs.last().map(|l| l.2) == xs.first().map(|f| group.mul(t, f.1));
                    if !(chained && closed) {
                        continue;
                    }
                    let target = if unit {
                        plain.index(n, t, 0, &xs.iter().map(|x| x.0).collect::<Vec<_>>())
                    } else if n == 0 {
                        plain.index(0, t, xs[0].0, &[])
                    } else {
                        plain.index(n, t, xs[0].0 + 1, &xs[1..].iter().map(|x| x.0).collect::<Vec<_>>())
                    };
                    trip.push((target, idx, S::one()));
                }
                Matrix::from_triplets(plain.dim(n), stabilized.dim(n), trip)
            })
            .collect();
        Ok(TraceMap { stabilized, plain, maps })
    }

    pub fn check(&self) -> TraceReport {
        let top = self.maps.len() - 1;
        let (s, p, tr) = (&self.stabilized, &self.plain, &self.maps);
        let commutes_with_b = (1..=top).all(|n| tr[n - 1].mul(s.b(n)) == p.b(n).mul(&tr[n]));
        let commutes_with_big_b = (0..top).all(|n| tr[n + 1].mul(s.big_b(n)) == p.big_b(n).mul(&tr[n]));
        let commutes_with_t = (0..=top).all(|n| tr[n].mul(s.t_operator(n)) == p.t_operator(n).mul(&tr[n]));
        let group = p.algebra().group();
        let equivariant = group
            .generators()
            .iter()
            .all(|&g| (0..=top).all(|n| tr[n].mul(&s.action(g, n)) == p.action(g, n).mul(&tr[n])));
        TraceReport {
            top,
            commutes_with_b,
            commutes_with_big_b,
            commutes_with_t,
            equivariant,
            surjective_in_degree_zero: tr[0].rank() == p.dim(0),
        }
    }
}
