use crate::fingroup::FiniteGroup;
use crate::homalg::{image, restrict_map, Matrix, QuotientPresentation, QuotientSpace, Supercomplex};
use crate::scalar::Scalar;

use super::forms::{averaged_powers, OmegaForms};
use super::CyclicError;

/// The level-`n` truncation `⊕_{j<n} Ω^j ⊕ Ω^n / bΩ^{n+1}` with `∂ = b + B`,
/// folded into parities. `∂² = id − T`.
#[derive(Clone, Debug)]
pub struct HodgeLevel<S> {
    pub level: usize,
    pub para: Supercomplex<S>,
    /// group element `t` of each even / odd basis vector
    pub even_t: Vec<usize>,
    pub odd_t: Vec<usize>,
    /// per group element `s`, its action on the even and odd parts
    actions: Vec<(Matrix<S>, Matrix<S>)>,
    t_even: Matrix<S>,
    t_odd: Matrix<S>,
    group: FiniteGroup,
}

struct Piece<S> {
    parity: usize,
    // ambient degree
    degree: usize,
    quotient: Option<QuotientSpace<S>>,
    // projection and section of the quotient piece
    maps: Option<(Matrix<S>, Matrix<S>)>,
    dim: usize,
}

impl<S: Scalar> HodgeLevel<S> {
    pub fn new(forms: &OmegaForms<S>, level: usize) -> Result<Self, CyclicError> {
        if level + 1 > forms.top() {
            return Err(CyclicError::LevelOutOfRange { level, top: forms.top() });
        }
        let group = forms.algebra().group();
        let mut pieces: Vec<Piece<S>> = (0..level)
            .map(|j| Piece {
                parity: j % 2,
                degree: j,
                quotient: None,
                maps: None,
                dim: forms.dim(j),
            })
            .collect();
        let rel = image(forms.b(level + 1));
        let q = QuotientSpace::new(&QuotientPresentation::new(forms.dim(level), rel.basis().to_vec()));
        pieces.push(Piece {
            parity: level % 2,
            degree: level,
            dim: q.dim(),
            maps: Some((q.projection_matrix(), q.section_matrix())),
            quotient: Some(q),
        });

        // position of each piece inside its parity
        let mut offsets = vec![0; pieces.len()];
        let mut sizes = [0usize; 2];
        for (k, p) in pieces.iter().enumerate() {
            offsets[k] = sizes[p.parity];
            sizes[p.parity] += p.dim;
        }
        let mut labels = [vec![0; sizes[0]], vec![0; sizes[1]]];
        for (k, p) in pieces.iter().enumerate() {
            for i in 0..p.dim {
                let amb = match &p.quotient {
                    Some(q) => q.complement()[i],
                    None => i,
                };
                labels[p.parity][offsets[k] + i] = forms.t_of(p.degree, amb);
            }
        }
        let dims_of = |parity: usize| -> Vec<usize> { pieces.iter().map(|p| if p.parity == parity { p.dim } else { 0 }).collect() };
        // an operator on ambient forms, seen between two pieces
        let between = |m: &Matrix<S>, from: usize, to: usize| -> Matrix<S> {
            let mut m = m.clone();
            if let Some((_, sec)) = &pieces[from].maps {
                m = m.mul(sec);
            }
            if let Some((proj, _)) = &pieces[to].maps {
                m = proj.mul(&m);
            }
            m
        };
        let assemble = |from_parity: usize, blocks: Vec<(usize, usize, Matrix<S>)>| -> Matrix<S> {
            Matrix::from_blocks(&dims_of(1 - from_parity), &dims_of(from_parity), blocks)
        };
        let mut d_blocks: [Vec<(usize, usize, Matrix<S>)>; 2] = [Vec::new(), Vec::new()];
        for (k, p) in pieces.iter().enumerate() {
            if p.degree >= 1 {
                d_blocks[p.parity].push((k - 1, k, between(forms.b(p.degree), k, k - 1)));
            }
            // B out of the quotient piece vanishes
            if p.degree < level {
                d_blocks[p.parity].push((k + 1, k, between(forms.big_b(p.degree), k, k + 1)));
            }
        }
        let [de, d_o] = d_blocks;
        let d_even = assemble(0, de);
        let d_odd = assemble(1, d_o);

        let diag = |parity: usize, op: &dyn Fn(usize) -> Matrix<S>| -> Matrix<S> {
            let ds = dims_of(parity);
            let blocks = pieces
                .iter()
                .enumerate()
                .filter(|(_, p)| p.parity == parity)
                .map(|(k, p)| (k, k, between(&op(p.degree), k, k)))
                .collect();
            Matrix::from_blocks(&ds, &ds, blocks)
        };
        let t_even = diag(0, &|n| forms.t_operator(n).clone());
        let t_odd = diag(1, &|n| forms.t_operator(n).clone());
        let actions = group
            .elements()
            .map(|s| (diag(0, &|n| forms.action(s, n)), diag(1, &|n| forms.action(s, n))))
            .collect();
        let defect = (Matrix::identity(sizes[0]).sub(&t_even), Matrix::identity(sizes[1]).sub(&t_odd));
        let para = Supercomplex::new(d_even, d_odd, Some(defect))?;
        let [even_t, odd_t] = labels;
        Ok(HodgeLevel {
            level,
            para,
            even_t,
            odd_t,
            actions,
            t_even,
            t_odd,
            group: group.clone(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.para.even_dim, self.para.odd_dim)
    }

    pub fn action(&self, s: usize) -> (&Matrix<S>, &Matrix<S>) {
        let (e, o) = &self.actions[s];
        (e, o)
    }

    pub fn t_operator(&self) -> (&Matrix<S>, &Matrix<S>) {
        (&self.t_even, &self.t_odd)
    }

    /// `E` on the even and odd parts.
    pub fn projector_e(&self) -> (Matrix<S>, Matrix<S>) {
        (
            averaged_powers(&self.t_even, self.group.exponent()),
            averaged_powers(&self.t_odd, self.group.exponent()),
        )
    }

    /// Homology of the `E`-part, where `T` is the identity and `∂² = 0`.
    pub fn e_homology(&self) -> Result<(usize, usize), CyclicError> {
        let (ee, eo) = self.projector_e();
        let even = image(&ee);
        let odd = image(&eo);
        let restricted = Supercomplex::new(
            restrict_map(&self.para.d_even, &even, &odd)?,
            restrict_map(&self.para.d_odd, &odd, &even)?,
            None,
        )?;
        Ok(restricted.homology()?)
    }

    /// The summand over a single group element `t`.
    pub fn block(&self, t: usize) -> HodgeBlock<S> {
        let ei: Vec<usize> = (0..self.even_t.len()).filter(|&i| self.even_t[i] == t).collect();
        let oi: Vec<usize> = (0..self.odd_t.len()).filter(|&i| self.odd_t[i] == t).collect();
        let sel = |m: &Matrix<S>, rows: &[usize], cols: &[usize]| m.select_rows(rows).select_cols(cols);
        let defect = self.para.defect.as_ref().map(|(a, b)| (sel(a, &ei, &ei), sel(b, &oi, &oi)));
        let para = Supercomplex {
            even_dim: ei.len(),
            odd_dim: oi.len(),
            d_even: sel(&self.para.d_even, &oi, &ei),
            d_odd: sel(&self.para.d_odd, &ei, &oi),
            defect,
        };
        HodgeBlock {
            t,
            para,
            even_idx: ei,
            odd_idx: oi,
        }
    }

    /// Action of `s` restricted to the summand of an element it centralizes.
    pub fn block_action(&self, block: &HodgeBlock<S>, s: usize) -> (Matrix<S>, Matrix<S>) {
        let (e, o) = &self.actions[s];
        (
            e.select_rows(&block.even_idx).select_cols(&block.even_idx),
            o.select_rows(&block.odd_idx).select_cols(&block.odd_idx),
        )
    }
}

#[derive(Clone, Debug)]
pub struct HodgeBlock<S> {
    pub t: usize,
    pub para: Supercomplex<S>,
    pub even_idx: Vec<usize>,
    pub odd_idx: Vec<usize>,
}
