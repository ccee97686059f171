//! Classification of 0-1 structure matrices: regularity, total balance,
//! retraction to an identity matrix, and the bordered shape.
//!
//! Every function reads only the zero pattern of the matrix.

use alloc::vec::Vec;

use crate::matrix::StructureMatrix;
use crate::poly::Polynomial;
use crate::semigroup::Element;

pub fn is_regular(m: &StructureMatrix) -> bool {
    m.check_regular().is_ok()
}

/// Rows `α ≠ β` and columns `i ≠ j` with `M(α,i) = M(α,j) = M(β,i) = 1` and
/// `M(β,j) = 0`, as `(α, β, i, j)`.
pub fn forbidden_submatrix(m: &StructureMatrix) -> Option<(usize, usize, usize, usize)> {
    for a in 0..m.rows() {
        for b in 0..m.rows() {
            if a == b {
                continue;
            }
            for i in 0..m.cols() {
                if !(m.is_nonzero(a, i) && m.is_nonzero(b, i)) {
                    continue;
                }
                for j in 0..m.cols() {
                    if j != i && m.is_nonzero(a, j) && !m.is_nonzero(b, j) {
                        return Some((a, b, i, j));
                    }
                }
            }
        }
    }
    None
}

/// No 2×2 submatrix has exactly one zero.
pub fn is_totally_balanced(m: &StructureMatrix) -> bool {
    forbidden_submatrix(m).is_none()
}

/// Rows sharing a nonzero column are equal, and columns sharing a nonzero row
/// are equal.
pub fn is_totally_balanced_by_lines(m: &StructureMatrix) -> bool {
    let row_eq = |a: usize, b: usize| (0..m.cols()).all(|c| m.is_nonzero(a, c) == m.is_nonzero(b, c));
    let col_eq = |i: usize, j: usize| (0..m.rows()).all(|r| m.is_nonzero(r, i) == m.is_nonzero(r, j));
    for a in 0..m.rows() {
        for b in a + 1..m.rows() {
            if (0..m.cols()).any(|c| m.is_nonzero(a, c) && m.is_nonzero(b, c)) && !row_eq(a, b) {
                return false;
            }
        }
    }
    for i in 0..m.cols() {
        for j in i + 1..m.cols() {
            if (0..m.rows()).any(|r| m.is_nonzero(r, i) && m.is_nonzero(r, j)) && !col_eq(i, j) {
                return false;
            }
        }
    }
    true
}

fn same_row(m: &StructureMatrix, a: usize, b: usize) -> bool {
    (0..m.cols()).all(|c| m.is_nonzero(a, c) == m.is_nonzero(b, c))
}

fn same_col(m: &StructureMatrix, i: usize, j: usize) -> bool {
    (0..m.rows()).all(|r| m.is_nonzero(r, i) == m.is_nonzero(r, j))
}

/// Two distinct rows with the same zero pattern.
pub fn equal_rows(m: &StructureMatrix) -> Option<(usize, usize)> {
    (0..m.rows())
        .flat_map(|a| (a + 1..m.rows()).map(move |b| (a, b)))
        .find(|&(a, b)| same_row(m, a, b))
}

/// Two distinct columns with the same zero pattern.
pub fn equal_cols(m: &StructureMatrix) -> Option<(usize, usize)> {
    (0..m.cols())
        .flat_map(|i| (i + 1..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| same_col(m, i, j))
}

pub fn is_all_ones(m: &StructureMatrix) -> bool {
    m.entries().iter().all(Option::is_some)
}

/// Maps a totally balanced matrix onto `I_k`.
///
/// `M(λ, i) ≠ 0` iff `row_class[λ] == col_class[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionPlan {
    /// `r`: each row to the lowest-indexed row equal to it.
    pub row_survivor: Vec<usize>,
    /// `s`: each column to the lowest-indexed column equal to it.
    pub col_survivor: Vec<usize>,
    /// `φ_r ∘ r`, into `0..k`.
    pub row_class: Vec<usize>,
    /// `φ_c ∘ s`, into `0..k`.
    pub col_class: Vec<usize>,
    pub k: usize,
}

impl RetractionPlan {
    /// The lowest-indexed column of each class.
    pub fn class_col(&self, class: usize) -> usize {
        self.col_class.iter().position(|&c| c == class).expect("every class has a column")
    }

    /// The lowest-indexed row of each class.
    pub fn class_row(&self, class: usize) -> usize {
        self.row_class.iter().position(|&c| c == class).expect("every class has a row")
    }

    /// `[i, λ] ↦ [col_class(i), row_class(λ)]`; other elements are fixed.
    pub fn hat_element(&self, e: &Element) -> Element {
        match *e {
            Element::Triple { i, lambda, .. } => {
                Element::pair(self.col_class[i], self.row_class[lambda])
            }
            other => other,
        }
    }

    /// `p̂`: the polynomial over `S_{I_k}` with every constant relabeled.
    pub fn hat(&self, p: &Polynomial) -> Polynomial {
        p.map_constants(|c| self.hat_element(c))
            .expect("relabeling keeps constants nonzero")
    }
}

/// The outcome of deleting duplicate rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Retraction {
    /// Present iff the residual is a permutation matrix.
    pub plan: Option<RetractionPlan>,
    /// The duplicate-free matrix.
    pub residual: StructureMatrix,
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
}

/// Deletes duplicate rows, then duplicate columns, keeping the lowest index of
/// each group. Deleting copies of kept rows leaves column equality unchanged,
/// so one pass of each suffices.
pub fn retract(m: &StructureMatrix) -> Retraction {
    let row_survivor: Vec<usize> =
        (0..m.rows()).map(|r| (0..=r).find(|&a| same_row(m, a, r)).unwrap()).collect();
    let col_survivor: Vec<usize> =
        (0..m.cols()).map(|c| (0..=c).find(|&a| same_col(m, a, c)).unwrap()).collect();
    let kept_rows: Vec<usize> = (0..m.rows()).filter(|&r| row_survivor[r] == r).collect();
    let kept_cols: Vec<usize> = (0..m.cols()).filter(|&c| col_survivor[c] == c).collect();
    let residual = StructureMatrix::from_fn(kept_rows.len(), kept_cols.len(), |r, c| {
        m.is_nonzero(kept_rows[r], kept_cols[c])
    })
    .expect("a nonempty matrix keeps a row and a column");

    let is_permutation = residual.rows() == residual.cols()
        && (0..residual.rows())
            .all(|r| (0..residual.cols()).filter(|&c| residual.is_nonzero(r, c)).count() == 1)
        && (0..residual.cols())
            .all(|c| (0..residual.rows()).filter(|&r| residual.is_nonzero(r, c)).count() == 1);

    let plan = is_permutation.then(|| {
        let k = kept_rows.len();
        let row_pos = |r: usize| kept_rows.iter().position(|&x| x == r).unwrap();
        let row_class: Vec<usize> = row_survivor.iter().map(|&r| row_pos(r)).collect();
        // the class of a kept column is the class of its unique nonzero row
        let col_of_kept: Vec<usize> = kept_cols
            .iter()
            .map(|&c| (0..k).find(|&r| residual.is_nonzero(r, kept_cols.iter().position(|&x| x == c).unwrap())).unwrap())
            .collect();
        let col_class: Vec<usize> = col_survivor
            .iter()
            .map(|&c| col_of_kept[kept_cols.iter().position(|&x| x == c).unwrap()])
            .collect();
        RetractionPlan {
            row_survivor: row_survivor.clone(),
            col_survivor: col_survivor.clone(),
            row_class,
            col_class,
            k,
        }
    });
    Retraction {
        plan,
        residual,
        kept_rows,
        kept_cols,
    }
}

/// An all-ones row and an all-ones column, lowest indices first.
pub fn border_lines(m: &StructureMatrix) -> Option<(usize, usize)> {
    let row = (0..m.rows()).find(|&r| (0..m.cols()).all(|c| m.is_nonzero(r, c)))?;
    let col = (0..m.cols()).find(|&c| (0..m.rows()).all(|r| m.is_nonzero(r, c)))?;
    Some((row, col))
}

/// Which fast procedures apply to a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixClass {
    /// `J_{m×n}`.
    AllOnes,
    /// Totally balanced with `k ≥ 2`.
    TotallyBalanced(RetractionPlan),
    /// Not totally balanced, with all-ones row `row` and column `col`.
    Bordered { row: usize, col: usize },
    /// None of the above.
    General,
}

impl MatrixClass {
    pub fn name(&self) -> &'static str {
        match self {
            MatrixClass::AllOnes => "all-ones",
            MatrixClass::TotallyBalanced(_) => "totally balanced",
            MatrixClass::Bordered { .. } => "bordered",
            MatrixClass::General => "general",
        }
    }

    pub fn is_totally_balanced(&self) -> bool {
        matches!(self, MatrixClass::AllOnes | MatrixClass::TotallyBalanced(_))
    }
}

pub fn classify(m: &StructureMatrix) -> MatrixClass {
    if is_all_ones(m) {
        return MatrixClass::AllOnes;
    }
    if let Some(plan) = retract(m).plan {
        return MatrixClass::TotallyBalanced(plan);
    }
    match border_lines(m) {
        Some((row, col)) => MatrixClass::Bordered { row, col },
        None => MatrixClass::General,
    }
}

/// The smallest zero pattern (as a bit string) over all row and column
/// permutations. Exponential; meant for matrices up to about 4×4.
pub fn canonical_pattern(m: &StructureMatrix) -> Vec<bool> {
    let rp = permutations(m.rows());
    let cp = permutations(m.cols());
    let mut best: Option<Vec<bool>> = None;
    for r in &rp {
        for c in &cp {
            let bits: Vec<bool> = (0..m.rows())
                .flat_map(|a| (0..m.cols()).map(move |b| (a, b)))
                .map(|(a, b)| m.is_nonzero(r[a], c[b]))
                .collect();
            if best.as_ref().is_none_or(|b| bits < *b) {
                best = Some(bits);
            }
        }
    }
    best.expect("at least one permutation")
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> StructureMatrix {
        StructureMatrix::from_01(rows).unwrap()
    }

    #[test]
    fn hollow_three_is_not_balanced() {
        let h3 = StructureMatrix::hollow(3).unwrap();
        assert!(!is_totally_balanced(&h3));
        assert!(!is_totally_balanced_by_lines(&h3));
        let r = retract(&h3);
        assert!(r.plan.is_none());
        assert_eq!(r.residual, h3);
        let (a, b, i, j) = forbidden_submatrix(&h3).unwrap();
        assert!(h3.is_nonzero(a, i) && h3.is_nonzero(a, j) && h3.is_nonzero(b, i));
        assert!(!h3.is_nonzero(b, j));
    }

    #[test]
    fn identities_and_all_ones() {
        for k in 1..4 {
            let i = StructureMatrix::identity(k).unwrap();
            assert!(is_totally_balanced(&i));
            assert_eq!(retract(&i).plan.unwrap().k, k);
        }
        let j = StructureMatrix::all_ones(2, 3).unwrap();
        assert_eq!(retract(&j).plan.unwrap().k, 1);
        assert_eq!(classify(&j), MatrixClass::AllOnes);
    }

    #[test]
    fn plan_reconstructs_the_pattern() {
        let tb = m(&[&[1, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 0, 0], &[0, 0, 0, 1]]);
        let plan = retract(&tb).plan.unwrap();
        assert_eq!(plan.k, 3);
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(tb.is_nonzero(r, c), plan.row_class[r] == plan.col_class[c]);
            }
        }
        assert_eq!(plan.row_survivor, [0, 1, 0, 3]);
        assert_eq!(plan.col_survivor, [0, 0, 2, 3]);
        assert!(equal_rows(&tb).is_some() && equal_cols(&tb).is_some());
    }

    #[test]
    fn classes() {
        let h3 = StructureMatrix::hollow(3).unwrap();
        assert_eq!(classify(&h3), MatrixClass::General);
        assert_eq!(classify(&h3.border()), MatrixClass::Bordered { row: 3, col: 3 });
        let a = h3.border().direct_sum(&h3);
        assert_eq!(classify(&a), MatrixClass::General);
        assert!(matches!(classify(&a.border()), MatrixClass::Bordered { .. }));
        assert!(matches!(
            classify(&StructureMatrix::identity(2).unwrap()),
            MatrixClass::TotallyBalanced(_)
        ));
    }

    #[test]
    fn border_never_balances_a_zero() {
        let i2 = StructureMatrix::identity(2).unwrap();
        assert!(!is_totally_balanced(&i2.border()));
        assert!(is_totally_balanced(&StructureMatrix::all_ones(1, 1).unwrap().border()));
    }

    #[test]
    fn canonical_patterns_identify_permuted_copies() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = a.permuted(&[1, 0], &[2, 1, 0]).unwrap();
        assert_eq!(canonical_pattern(&a), canonical_pattern(&b));
        assert_ne!(canonical_pattern(&a), canonical_pattern(&StructureMatrix::all_ones(2, 3).unwrap()));
        assert_eq!(permutations(3).len(), 6);
    }
}
