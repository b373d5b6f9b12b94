
use super::{AlgebraHom, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{dot, unit, Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// `M / I` together with the projection and a section of it.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub algebra: LeibnizAlgebra<F>,
    pub projection: AlgebraHom<F>,
    /// Quotient basis vector `a` is the image of the standard vector
    /// `e_{section[a]}` of the source.
    pub section: Vec<usize>,
    pub ideal: Subspace<F>,
}

impl<F: Scalar> Quotient<F> {
    /// The representative of a quotient vector in the span of the section.
    pub fn lift(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ideal.ambient_dim()];
        for (a, &k) in self.section.iter().enumerate() {
            out[k] = v[a].clone();
        }
        out
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        self.projection.apply(v)
    }

    /// Full preimage of a subspace of the quotient; it contains the ideal.
    pub fn preimage(&self, s: &Subspace<F>) -> Subspace<F> {
        let lifted = Subspace::span(
            self.ideal.ambient_dim(),
            s.basis().row_vectors().map(|v| self.lift(v)),
        );
        lifted.sum(&self.ideal).expect("same ambient")
    }

    /// Image of a subspace of the source.
    pub fn image(&self, s: &Subspace<F>) -> Subspace<F> {
        s.image(self.projection.matrix())
    }
}

impl<F: Scalar> LeibnizAlgebra<F> {
    fn full(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    /// Span of `[a b]` over basis vectors `a` of `u` and `b` of `v`.
    pub fn bracket_spaces(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let mut out = Vec::new();
        for a in u.basis().row_vectors() {
            for b in v.basis().row_vectors() {
                out.push(self.br(a, b));
            }
        }
        Subspace::span(self.dim(), out)
    }

    /// `C(M)`: the span of `[e_i e_j] + [e_j e_i]`, `i <= j`.
    pub fn leibniz_kernel(&self) -> Subspace<F> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v: Vec<F> = self
                    .basis_bracket(i, j)
                    .iter()
                    .zip(self.basis_bracket(j, i))
                    .map(|(a, b)| a.clone() + b)
                    .collect();
                out.push(v);
            }
        }
        Subspace::span(n, out)
    }

    /// `dim C(M)`.
    pub fn rank(&self) -> usize {
        self.leibniz_kernel().dim()
    }

    /// Two-sided annihilator `{z : [M z] = [z M] = 0}`.
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        let mut blocks = Vec::with_capacity(2 * n);
        for i in 0..n {
            blocks.push(self.ad_basis(i));
            blocks.push(self.right_mult(&unit(n, i)));
        }
        Matrix::vstack(n, &blocks).kernel()
    }

    /// `{x : [x u] = [u x] = 0}`.
    pub fn centralizer(&self, u: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let blocks: Vec<Matrix<F>> = u
            .basis()
            .row_vectors()
            .flat_map(|b| [self.left_mult(b), self.right_mult(b)])
            .collect();
        Matrix::vstack(n, &blocks).kernel()
    }

    /// `u' = [u u]`.
    pub fn derived(&self, u: &Subspace<F>) -> Subspace<F> {
        self.bracket_spaces(u, u)
    }

    /// Derived series `u, u', u'', …` of a bracket-closed subspace, listed
    /// until it becomes stationary.
    pub fn derived_series_of(&self, u: &Subspace<F>) -> Vec<Subspace<F>> {
        let mut out = vec![u.clone()];
        loop {
            let next = self.derived(out.last().unwrap());
            if &next == out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace<F>> {
        self.derived_series_of(&self.full())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Left-normed lower central series `u^1 = u`, `u^{k+1} = [u, u^k]`.
    pub fn lower_central_series(&self, u: &Subspace<F>) -> Vec<Subspace<F>> {
        let mut out = vec![u.clone()];
        loop {
            let next = self.bracket_spaces(u, out.last().unwrap());
            if &next == out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn is_nilpotent(&self, u: &Subspace<F>) -> bool {
        self.lower_central_series(u).last().unwrap().is_zero()
    }

    pub fn is_ideal(&self, u: &Subspace<F>, side: Side) -> bool {
        let n = self.dim();
        let check_left = matches!(side, Side::Left | Side::TwoSided);
        let check_right = matches!(side, Side::Right | Side::TwoSided);
        for v in u.basis().row_vectors() {
            for i in 0..n {
                if check_left && !u.contains(&self.br_basis_left(i, v)) {
                    return false;
                }
                if check_right && !u.contains(&self.br(v, &unit(n, i))) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_closed(&self, u: &Subspace<F>) -> bool {
        self.derived(u).is_subspace_of(u)
    }

    /// Quotient by a two-sided ideal, with structure constants on the
    /// complement spanned by the non-pivot standard vectors.
    pub fn quotient_map(&self, ideal: &Subspace<F>) -> Result<Quotient<F>> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::NotAnIdeal("two-sided"));
        }
        let n = self.dim();
        let section: Vec<usize> = ideal.standard_complement().pivots().to_vec();
        let q = section.len();
        let project = |v: &[F]| -> Vec<F> {
            let r = ideal.reduce(v);
            section.iter().map(|&k| r[k].clone()).collect()
        };
        let cols: Vec<Vec<F>> = (0..n).map(|k| project(&unit(n, k))).collect();
        let pmat = Matrix::from_columns(q, &cols)?;
        let algebra = LeibnizAlgebra::from_brackets(q, |a, b| {
            project(self.basis_bracket(section[a], section[b]))
        })
        .with_labels(section.iter().map(|&k| self.labels()[k].clone()).collect())?;
        let projection = AlgebraHom::new(self.clone(), algebra.clone(), pmat)?;
        Ok(Quotient {
            algebra,
            projection,
            section,
            ideal: ideal.clone(),
        })
    }

    /// `M / I` and the projection morphism.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(LeibnizAlgebra<F>, AlgebraHom<F>)> {
        let q = self.quotient_map(ideal)?;
        Ok((q.algebra, q.projection))
    }

    /// The algebra structure on a bracket-closed subspace, in the
    /// coordinates of its canonical basis.
    pub fn restrict(&self, u: &Subspace<F>) -> Result<LeibnizAlgebra<F>> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        let basis = u.basis_vectors();
        let mut consts = Vec::with_capacity(u.dim().pow(3));
        for a in &basis {
            for b in &basis {
                consts.extend(u.coords(&self.br(a, b)).ok_or(Error::NotClosed)?);
            }
        }
        LeibnizAlgebra::from_tensor(u.dim(), consts)
    }

    /// Smallest bracket-closed subspace containing the generators.
    pub fn subalgebra_closure<V: AsRef<[F]>>(&self, gens: impl IntoIterator<Item = V>) -> Subspace<F> {
        let mut u = Subspace::span(self.dim(), gens);
        loop {
            let next = u.sum(&self.derived(&u)).expect("same ambient");
            if next == u {
                return u;
            }
            u = next;
        }
    }

    /// Smallest two-sided ideal containing the generators.
    pub fn ideal_closure<V: AsRef<[F]>>(&self, gens: impl IntoIterator<Item = V>) -> Subspace<F> {
        let full = self.full();
        let mut u = Subspace::span(self.dim(), gens);
        loop {
            let next = u
                .sum(&self.bracket_spaces(&full, &u))
                .and_then(|s| s.sum(&self.bracket_spaces(&u, &full)))
                .expect("same ambient");
            if next == u {
                return u;
            }
            u = next;
        }
    }

    /// `trace(L_x L_y)` on basis vectors, `L` the left multiplication.
    pub(crate) fn killing_matrix(&self) -> Matrix<F> {
        let n = self.dim();
        let ads: Vec<Matrix<F>> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = trace_of_product(&ads[i], &ads[j]);
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// Largest solvable two-sided ideal.
    ///
    /// For the Lie algebra `L = M / C(M)` the radical is the Killing-form
    /// orthogonal of `[L, L]`; it is pulled back to `M`.
    pub fn solvable_radical(&self) -> Subspace<F> {
        let kernel = self.leibniz_kernel();
        let q = self
            .quotient_map(&kernel)
            .expect("the Leibniz kernel is a two-sided ideal");
        q.preimage(&lie_radical(&q.algebra))
    }
}

/// Radical of a Lie algebra as `[L, L]^⊥` for the Killing form.
pub(crate) fn lie_radical<F: Scalar>(l: &LeibnizAlgebra<F>) -> Subspace<F> {
    let n = l.dim();
    let kill = l.killing_matrix();
    let derived = l.derived(&Subspace::full(n));
    let rows: Vec<Vec<F>> = derived
        .basis()
        .row_vectors()
        .map(|d| (0..n).map(|j| dot(d, &kill.column(j))).collect())
        .collect();
    Matrix::from_rows(n, rows)
        .expect("rows have length n")
        .kernel()
}

fn trace_of_product<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> F {
    let n = a.rows();
    let mut t = F::zero();
    for i in 0..n {
        for k in 0..n {
            let x = &a[(i, k)];
            let y = &b[(k, i)];
            if !x.is_zero() && !y.is_zero() {
                t = t + &(x.clone() * y);
            }
        }
    }
    t
}
