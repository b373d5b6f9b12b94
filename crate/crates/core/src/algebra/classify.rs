use std::fmt;

use num_traits::Zero;

use super::LeibnizAlgebra;
use crate::linalg::unit;
use crate::scalar::Scalar;

/// The identities checked by [`LeibnizAlgebra::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `[a[bc]] = [[ab]c] + [b[ac]]`
    LeftLeibniz,
    /// `[[bc]a] = [[ba]c] + [b[ca]]`
    RightLeibniz,
    /// `[a[bb]] = 0`
    LeftCentral,
    /// `[aa] = 0`
    Lie,
    /// `ψ([ab], c) = ψ(a, [bc])`
    Associativity,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::LeftLeibniz => "left Leibniz",
            Law::RightLeibniz => "right Leibniz",
            Law::LeftCentral => "left central",
            Law::Lie => "Lie",
            Law::Associativity => "associativity of psi",
        };
        f.write_str(s)
    }
}

/// A triple of vectors on which `law` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<F> {
    pub law: Law,
    pub a: Vec<F>,
    pub b: Vec<F>,
    pub c: Vec<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationFlags<F> {
    pub left_leibniz: bool,
    pub right_leibniz: bool,
    pub left_central: bool,
    pub symmetric: bool,
    pub lie: bool,
    /// Witness for the first failing law in the order left, right, central, Lie.
    pub witness: Option<Violation<F>>,
}

impl<F> ClassificationFlags<F> {
    /// Position in the chain left ⊇ left central ⊇ symmetric ⊇ Lie:
    /// 0 for non-Leibniz, 4 for Lie.
    pub fn level(&self) -> u8 {
        if self.lie {
            4
        } else if self.symmetric {
            3
        } else if self.left_central {
            2
        } else if self.left_leibniz {
            1
        } else {
            0
        }
    }

    /// `lie ⇒ symmetric ⇒ left_central ⇒ left_leibniz` and
    /// `symmetric ⇔ left ∧ right`.
    pub fn hierarchy_consistent(&self) -> bool {
        (!self.lie || self.symmetric)
            && (!self.symmetric || self.left_central)
            && (!self.left_central || self.left_leibniz)
            && self.symmetric == (self.left_leibniz && self.right_leibniz)
    }
}

fn sub_into<F: Scalar>(acc: &mut [F], v: &[F]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = std::mem::replace(a, F::zero()) - b;
        }
    }
}

fn add<F: Scalar>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b).collect()
}

fn is_zero<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(Zero::is_zero)
}

impl<F: Scalar> LeibnizAlgebra<F> {
    fn e(&self, i: usize) -> Vec<F> {
        unit(self.dim(), i)
    }

    /// Checks `[a[bc]] = [[ab]c] + [b[ac]]` on basis triples.
    pub fn left_leibniz_violation(&self) -> Option<Violation<F>> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let ab = self.basis_bracket(a, b);
                for c in 0..n {
                    let mut lhs = self.br_basis_left(a, self.basis_bracket(b, c));
                    sub_into(&mut lhs, &self.br(ab, &self.e(c)));
                    sub_into(&mut lhs, &self.br_basis_left(b, self.basis_bracket(a, c)));
                    if !is_zero(&lhs) {
                        return Some(Violation {
                            law: Law::LeftLeibniz,
                            a: self.e(a),
                            b: self.e(b),
                            c: self.e(c),
                        });
                    }
                }
            }
        }
        None
    }

    /// Checks `[[bc]a] = [[ba]c] + [b[ca]]` on basis triples; the violation
    /// is reported as `(a, b, c)` in that formula.
    pub fn right_leibniz_violation(&self) -> Option<Violation<F>> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut lhs = self.br(self.basis_bracket(b, c), &self.e(a));
                    sub_into(&mut lhs, &self.br(self.basis_bracket(b, a), &self.e(c)));
                    sub_into(&mut lhs, &self.br_basis_left(b, self.basis_bracket(c, a)));
                    if !is_zero(&lhs) {
                        return Some(Violation {
                            law: Law::RightLeibniz,
                            a: self.e(a),
                            b: self.e(b),
                            c: self.e(c),
                        });
                    }
                }
            }
        }
        None
    }

    /// Checks `[a[bb]] = 0` through its polarization on basis vectors; the
    /// violation is `(a, b, b)`.
    pub fn central_violation(&self) -> Option<Violation<F>> {
        let n = self.dim();
        for b in 0..n {
            for c in b..n {
                let sym = add(self.basis_bracket(b, c), self.basis_bracket(c, b));
                for a in 0..n {
                    if is_zero(&self.br_basis_left(a, &sym)) {
                        continue;
                    }
                    // [a[bb]] for b = e_b, else for b = e_b + e_c when the
                    // diagonal terms vanish.
                    let bb = self.br_basis_left(a, self.basis_bracket(b, b));
                    let w = if !is_zero(&bb) || b == c {
                        self.e(b)
                    } else {
                        let cc = self.br_basis_left(a, self.basis_bracket(c, c));
                        if is_zero(&cc) {
                            add(&self.e(b), &self.e(c))
                        } else {
                            self.e(c)
                        }
                    };
                    return Some(Violation {
                        law: Law::LeftCentral,
                        a: self.e(a),
                        b: w.clone(),
                        c: w,
                    });
                }
            }
        }
        None
    }

    /// Checks `[aa] = 0`; the violation is `(a, a, 0)`.
    pub fn square_violation(&self) -> Option<Violation<F>> {
        let n = self.dim();
        for i in 0..n {
            if !is_zero(self.basis_bracket(i, i)) {
                return Some(Violation {
                    law: Law::Lie,
                    a: self.e(i),
                    b: self.e(i),
                    c: vec![F::zero(); n],
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !is_zero(&add(self.basis_bracket(i, j), self.basis_bracket(j, i))) {
                    let a = add(&self.e(i), &self.e(j));
                    return Some(Violation {
                        law: Law::Lie,
                        a: a.clone(),
                        b: a,
                        c: vec![F::zero(); n],
                    });
                }
            }
        }
        None
    }

    pub fn is_left_leibniz(&self) -> bool {
        self.left_leibniz_violation().is_none()
    }

    /// Decides every level of the Leibniz hierarchy on basis triples, which
    /// suffices by multilinearity.
    pub fn classify(&self) -> ClassificationFlags<F> {
        let left = self.left_leibniz_violation();
        let right = self.right_leibniz_violation();
        let central = self.central_violation();
        let square = self.square_violation();
        let left_leibniz = left.is_none();
        let right_leibniz = right.is_none();
        let witness = left.or(right).or(central.clone()).or(square.clone());
        ClassificationFlags {
            left_leibniz,
            right_leibniz,
            left_central: left_leibniz && central.is_none(),
            symmetric: left_leibniz && right_leibniz,
            lie: left_leibniz && square.is_none(),
            witness,
        }
    }

    /// Recomputes the law named by `v` on its vectors; nonzero means the
    /// violation replays.
    pub fn replay(&self, v: &Violation<F>) -> Vec<F> {
        let (a, b, c) = (&v.a, &v.b, &v.c);
        match v.law {
            Law::LeftLeibniz => {
                let mut out = self.br(a, &self.br(b, c));
                sub_into(&mut out, &self.br(&self.br(a, b), c));
                sub_into(&mut out, &self.br(b, &self.br(a, c)));
                out
            }
            Law::RightLeibniz => {
                let mut out = self.br(&self.br(b, c), a);
                sub_into(&mut out, &self.br(&self.br(b, a), c));
                sub_into(&mut out, &self.br(b, &self.br(c, a)));
                out
            }
            Law::LeftCentral => self.br(a, &self.br(b, c)),
            Law::Lie => self.br(a, b),
            Law::Associativity => {
                let psi = |x: &[F], y: &[F]| add(&self.br(x, y), &self.br(y, x));
                let mut out = psi(&self.br(a, b), c);
                sub_into(&mut out, &psi(a, &self.br(b, c)));
                out
            }
        }
    }
}
