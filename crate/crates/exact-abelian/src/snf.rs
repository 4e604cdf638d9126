//! Smith normal form over the integers, with unimodular transforms tracked
//! on both sides, and the lattice utilities built on top of it (integer
//! solving, kernels, preimage lattices, saturation).

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `u * a * v = d` with `u`, `v` unimodular and `d` in Smith normal form:
/// diagonal, nonnegative, each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.a.cols() {
            let t = self.a[(i, c)].clone();
            self.a[(i, c)] = self.a[(j, c)].clone();
            self.a[(j, c)] = t;
        }
        for c in 0..self.u.cols() {
            let t = self.u[(i, c)].clone();
            self.u[(i, c)] = self.u[(j, c)].clone();
            self.u[(j, c)] = t;
        }
        // u_inv gets the inverse column op
        for r in 0..self.u_inv.rows() {
            let t = self.u_inv[(r, i)].clone();
            self.u_inv[(r, i)] = self.u_inv[(r, j)].clone();
            self.u_inv[(r, j)] = t;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.a.rows() {
            let t = self.a[(r, i)].clone();
            self.a[(r, i)] = self.a[(r, j)].clone();
            self.a[(r, j)] = t;
        }
        for r in 0..self.v.rows() {
            let t = self.v[(r, i)].clone();
            self.v[(r, i)] = self.v[(r, j)].clone();
            self.v[(r, j)] = t;
        }
        for c in 0..self.v_inv.cols() {
            let t = self.v_inv[(i, c)].clone();
            self.v_inv[(i, c)] = self.v_inv[(j, c)].clone();
            self.v_inv[(j, c)] = t;
        }
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.a.cols() {
            let t = q * &self.a[(k, c)];
            self.a[(i, c)] -= t;
        }
        for c in 0..self.u.cols() {
            let t = q * &self.u[(k, c)];
            self.u[(i, c)] -= t;
        }
        // inverse: col_k += q * col_i on u_inv
        for r in 0..self.u_inv.rows() {
            let t = q * &self.u_inv[(r, i)];
            self.u_inv[(r, k)] += t;
        }
    }

    /// col_j -= q * col_k
    fn col_sub(&mut self, j: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.a.rows() {
            let t = q * &self.a[(r, k)];
            self.a[(r, j)] -= t;
        }
        for r in 0..self.v.rows() {
            let t = q * &self.v[(r, k)];
            self.v[(r, j)] -= t;
        }
        for c in 0..self.v_inv.cols() {
            let t = q * &self.v_inv[(j, c)];
            self.v_inv[(k, c)] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.a.cols() {
            let t = -self.a[(i, c)].clone();
            self.a[(i, c)] = t;
        }
        for c in 0..self.u.cols() {
            let t = -self.u[(i, c)].clone();
            self.u[(i, c)] = t;
        }
        for r in 0..self.u_inv.rows() {
            let t = -self.u_inv[(r, i)].clone();
            self.u_inv[(r, i)] = t;
        }
    }

    /// row_k += row_i
    fn row_add(&mut self, k: usize, i: usize) {
        for c in 0..self.a.cols() {
            let t = self.a[(i, c)].clone();
            self.a[(k, c)] += t;
        }
        for c in 0..self.u.cols() {
            let t = self.u[(i, c)].clone();
            self.u[(k, c)] += t;
        }
        for r in 0..self.u_inv.rows() {
            let t = self.u_inv[(r, k)].clone();
            self.u_inv[(r, i)] -= t;
        }
    }
}

/// Pivot rule: nonzero entry of least absolute value in the trailing
/// submatrix, ties broken by lowest (row, col).
fn find_pivot(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let e = &a[(i, j)];
            if e.is_zero() {
                continue;
            }
            let v = e.abs();
            match &best {
                Some((bv, _, _)) if *bv <= v => {}
                _ => best = Some((v, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let steps = m.min(n);
    for k in 0..steps {
        'elim: loop {
            let Some((pi, pj)) = find_pivot(&w.a, k) else {
                break 'elim;
            };
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);
            if w.a[(k, k)].is_negative() {
                w.negate_row(k);
            }
            let mut dirty = false;
            let pivot = w.a[(k, k)].clone();
            for i in k + 1..m {
                if !w.a[(i, k)].is_zero() {
                    let q = w.a[(i, k)].div_floor(&pivot);
                    w.row_sub(i, k, &q);
                    if !w.a[(i, k)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..n {
                if !w.a[(k, j)].is_zero() {
                    let q = w.a[(k, j)].div_floor(&pivot);
                    w.col_sub(j, k, &q);
                    if !w.a[(k, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'elim;
            }
            // column/row clean; enforce divisibility into the rest
            let d = w.a[(k, k)].clone();
            let mut fix = None;
            'scan: for i in k + 1..m {
                for j in k + 1..n {
                    if !w.a[(i, j)].mod_floor(&d).is_zero() {
                        fix = Some(i);
                        break 'scan;
                    }
                }
            }
            match fix {
                Some(i) => {
                    w.row_add(k, i);
                    continue 'elim;
                }
                None => break 'elim,
            }
        }
    }
    SnfResult {
        u: w.u,
        d: w.a,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    }
}

/// Precomputed SNF of a matrix, for solving many systems `A x = b`.
pub struct Solver {
    snf: SnfResult,
    rank: usize,
    rows: usize,
    cols: usize,
}

impl Solver {
    pub fn new(a: &IntMatrix) -> Self {
        let s = snf(a);
        let rank = s.rank();
        Solver {
            snf: s,
            rank,
            rows: a.rows(),
            cols: a.cols(),
        }
    }

    /// Integer solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows);
        let c = self.snf.u.apply(b);
        let mut y = vec![BigInt::zero(); self.cols];
        for i in 0..self.rows {
            if i < self.rank {
                let d = &self.snf.d[(i, i)];
                let (q, r) = c[i].div_mod_floor(d);
                if !r.is_zero() {
                    return None;
                }
                if i < self.cols {
                    y[i] = q;
                }
            } else if !c[i].is_zero() {
                return None;
            }
        }
        Some(self.snf.v.apply(&y))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    Solver::new(a).solve(b)
}

/// Basis of the integer kernel `{x : A x = 0}`, as matrix columns.
/// The kernel of an integer matrix is a saturated sublattice.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = snf(a);
    let r = s.rank();
    let n = a.cols();
    s.v.submatrix(0, r, n, n - r)
}

/// Lattice `{x : M x = 0 (mod moduli)}` where `moduli[i]` is the modulus of
/// target coordinate `i` (0 means the coordinate must vanish exactly).
/// Returned as basis columns; always contains `moduli[i] * e_i`-relations'
/// preimages, hence full rank when every target coordinate has a modulus.
pub fn preimage_lattice(m: &IntMatrix, moduli: &[BigInt]) -> IntMatrix {
    assert_eq!(m.rows(), moduli.len());
    let torsion_cols: Vec<usize> = (0..moduli.len()).filter(|&i| !moduli[i].is_zero()).collect();
    let mut rel = IntMatrix::zeros(m.rows(), torsion_cols.len());
    for (j, &i) in torsion_cols.iter().enumerate() {
        rel[(i, j)] = moduli[i].clone();
    }
    let aug = m.hstack(&rel);
    let ker = kernel_basis(&aug);
    // project kernel columns to the x-part
    ker.submatrix(0, 0, m.cols(), ker.cols())
}

/// Does the lattice spanned by `basis` columns contain `x`?
pub fn lattice_contains(solver: &Solver, x: &[BigInt]) -> bool {
    solver.solve(x).is_some()
}

/// Lattice inclusion: every column of `b` lies in the span of `a`.
pub fn lattice_includes(a: &IntMatrix, b: &IntMatrix) -> bool {
    let s = Solver::new(a);
    (0..b.cols()).all(|j| s.solve(&b.col(j)).is_some())
}

pub fn lattice_eq(a: &IntMatrix, b: &IntMatrix) -> bool {
    lattice_includes(a, b) && lattice_includes(b, a)
}

/// A basis of the column-span lattice of a (possibly redundant) generating
/// set: the nonzero columns of `U^{-1} D`.
pub fn column_span_basis(gens: &IntMatrix) -> IntMatrix {
    let s = snf(gens);
    let r = s.rank();
    let ud = &s.u_inv * &s.d;
    ud.submatrix(0, 0, gens.rows(), r)
}

/// Saturation of the column span: `{x : k x in span for some k >= 1}`.
pub fn saturation(basis: &IntMatrix) -> IntMatrix {
    let s = snf(basis);
    let r = s.rank();
    // span = u_inv * D * (v-coords); saturation is spanned by the first r
    // columns of u_inv.
    s.u_inv.submatrix(0, 0, basis.rows(), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_from_i64;
    use num_traits::One;

    fn check_contract(a: &IntMatrix) {
        let s = snf(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d, "UAV = D");
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(a.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(a.cols()));
        assert_eq!(s.u.det().abs(), BigInt::one());
        assert_eq!(s.v.det().abs(), BigInt::one());
        let diag = s.diagonal();
        for i in 0..diag.len() {
            assert!(!diag[i].is_negative());
            if i + 1 < diag.len() && !diag[i + 1].is_zero() {
                assert!(!diag[i].is_zero(), "zero before nonzero in diagonal");
                assert!(diag[i + 1].mod_floor(&diag[i]).is_zero(), "divisibility chain");
            }
        }
        // off-diagonal zero
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_2x2_example() {
        let a = IntMatrix::from_rows(&[&[2, 1], &[0, 2]]);
        let s = snf(&a);
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(4)]);
        check_contract(&a);
    }

    #[test]
    fn snf_identity_and_zero() {
        let i = IntMatrix::identity(3);
        assert_eq!(snf(&i).diagonal(), vec![BigInt::one(); 3]);
        let z = IntMatrix::from_rows(&[&[0]]);
        assert_eq!(snf(&z).diagonal(), vec![BigInt::zero()]);
        check_contract(&i);
        check_contract(&z);
    }

    #[test]
    fn snf_known_4x4() {
        let m = IntMatrix::from_rows(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let s = snf(&m);
        assert_eq!(
            s.diagonal(),
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(21), BigInt::zero()]
        );
        check_contract(&m);
    }

    #[test]
    fn solve_and_kernel() {
        let a = IntMatrix::from_rows(&[&[2, 4], &[1, 2]]);
        assert_eq!(kernel_basis(&a).cols(), 1);
        let k = kernel_basis(&a).col(0);
        assert!(crate::matrix::vec_is_zero(&a.apply(&k)));
        assert!(solve(&a, &vec_from_i64(&[2, 1])).is_some());
        assert!(solve(&a, &vec_from_i64(&[1, 1])).is_none());
    }

    #[test]
    fn saturation_of_doubled_line() {
        let b = IntMatrix::from_rows(&[&[2], &[2]]);
        let sat = saturation(&b);
        assert_eq!(sat.cols(), 1);
        // (1,1) generates the saturation
        assert!(solve(&sat, &vec_from_i64(&[1, 1])).is_some());
    }
}
