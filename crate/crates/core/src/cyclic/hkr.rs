use crate::gcomplex::GComplex;
use crate::homalg::Matrix;
use crate::scalar::Scalar;

use super::algebra::GAlgebra;
use super::forms::OmegaForms;
use super::CyclicError;

/// Outcome of the HKR comparison for functions on a finite G-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkrReport {
    /// `|X^t|` for every group element `t`
    pub fixed_counts: Vec<usize>,
    /// Hochschild homology in degrees `0..=max_degree`
    pub hochschild: Vec<usize>,
    pub alpha_rank: usize,
    /// `α ∘ b = 0` on `Ω^1`
    pub alpha_kills_boundaries: bool,
    /// `ker α = im b` in degree 0
    pub alpha_exact: bool,
}

impl HkrReport {
    pub fn expected_h0(&self) -> usize {
        self.fixed_counts.iter().sum()
    }

    pub fn holds(&self) -> bool {
        let e = self.expected_h0();
        self.hochschild.first() == Some(&e)
            && self.hochschild[1..].iter().all(|&h| h == 0)
            && self.alpha_rank == e
            && self.alpha_kills_boundaries
            && self.alpha_exact
    }
}

/// `α(δ_t ⊗ a0 da1 … dan)`: restriction of `a0` to `X^t` in degree 0, zero above.
pub fn hkr_alpha<S: Scalar>(forms: &OmegaForms<S>) -> Matrix<S> {
    let a = forms.algebra();
    let d = a.dim();
    let group = a.group();
    let mut offsets = Vec::with_capacity(group.order() + 1);
    let mut acc = 0;
    let fixed: Vec<Vec<bool>> = group
        .elements()
        .map(|t| (0..d).map(|x| a.act(t, &[(x, S::one())]) == vec![(x, S::one())]).collect())
        .collect();
    for f in &fixed {
        offsets.push(acc);
        acc += f.iter().filter(|&&b| b).count();
    }
    let mut trip = Vec::new();
    for t in group.elements() {
        let fixed_x = fixed[t].iter().enumerate().filter(|(_, &f)| f);
        for (k, (x, _)) in (offsets[t]..).zip(fixed_x) {
            trip.push((k, forms.index(0, t, x, &[]), S::one()));
        }
    }
    Matrix::from_triplets(acc, forms.dim(0), trip)
}

pub fn hkr_check<S: Scalar>(x: &GComplex, max_degree: usize, budget: usize) -> Result<HkrReport, CyclicError> {
    let a = GAlgebra::<S>::functions_on(x)?;
    let forms = OmegaForms::new(&a, max_degree + 1, budget)?;
    let alpha = hkr_alpha(&forms);
    let fixed_counts = x
        .group()
        .elements()
        .map(|t| Ok(x.fixed_by_element(t)?.count(0)))
        .collect::<Result<Vec<_>, CyclicError>>()?;
    let alpha_rank = alpha.rank();
    let b1 = forms.b(1);
    Ok(HkrReport {
        hochschild: forms.hochschild(),
        alpha_rank,
        alpha_kills_boundaries: alpha.mul(b1).is_zero(),
        alpha_exact: alpha_rank + b1.rank() == forms.dim(0),
        fixed_counts,
    })
}
