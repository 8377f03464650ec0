//! Sparse exact linear algebra over the rational function field in the
//! formal parameter.  Rows are kept fraction-free: entries are parameter
//! polynomials, each row content-normalized (coprime integer coefficients,
//! unit polynomial content, positive leading pivot).

use crate::ring::{ParamScalar, Rat};
use num_traits::{One, Signed, Zero};

/// A sparse row: strictly increasing column indices with nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseRow {
    entries: Vec<(usize, ParamScalar)>,
}

impl SparseRow {
    pub fn new(mut entries: Vec<(usize, ParamScalar)>) -> Self {
        entries.retain(|(_, c)| !c.is_zero());
        entries.sort_by_key(|(j, _)| *j);
        for w in entries.windows(2) {
            assert_ne!(w[0].0, w[1].0, "duplicate column in sparse row");
        }
        SparseRow { entries }
    }

    pub fn from_dense(dense: &[ParamScalar]) -> Self {
        SparseRow {
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone()))
                .collect(),
        }
    }

    pub fn unit(col: usize) -> Self {
        SparseRow { entries: vec![(col, ParamScalar::one())] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn pivot(&self) -> Option<usize> {
        self.entries.first().map(|(j, _)| *j)
    }

    pub fn entries(&self) -> &[(usize, ParamScalar)] {
        &self.entries
    }

    pub fn get(&self, col: usize) -> ParamScalar {
        match self.entries.binary_search_by_key(&col, |(j, _)| *j) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => ParamScalar::zero(),
        }
    }

    pub fn columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(j, _)| *j)
    }

    pub fn map_columns(&self, f: impl Fn(usize) -> usize) -> SparseRow {
        SparseRow::new(self.entries.iter().map(|(j, c)| (f(*j), c.clone())).collect())
    }

    pub fn scale(&self, c: &ParamScalar) -> SparseRow {
        if c.is_zero() {
            return SparseRow::default();
        }
        SparseRow { entries: self.entries.iter().map(|(j, a)| (*j, a.mul(c))).collect() }
    }

    /// `a * self + b * other`, merged sparsely.
    pub fn combine(&self, a: &ParamScalar, other: &SparseRow, b: &ParamScalar) -> SparseRow {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut k) = (0, 0);
        while i < self.entries.len() || k < other.entries.len() {
            let jl = self.entries.get(i).map(|(j, _)| *j);
            let jr = other.entries.get(k).map(|(j, _)| *j);
            match (jl, jr) {
                (Some(l), Some(r)) if l == r => {
                    let v = self.entries[i].1.mul(a).add(&other.entries[k].1.mul(b));
                    if !v.is_zero() {
                        out.push((l, v));
                    }
                    i += 1;
                    k += 1;
                }
                (Some(l), None) => {
                    let v = self.entries[i].1.mul(a);
                    if !v.is_zero() {
                        out.push((l, v));
                    }
                    i += 1;
                }
                (Some(l), Some(r)) if l < r => {
                    let v = self.entries[i].1.mul(a);
                    if !v.is_zero() {
                        out.push((l, v));
                    }
                    i += 1;
                }
                (_, Some(r)) => {
                    let v = other.entries[k].1.mul(b);
                    if !v.is_zero() {
                        out.push((r, v));
                    }
                    k += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseRow { entries: out }
    }

    /// Divide by the content: the gcd of the entries as parameter
    /// polynomials times the rational content, signed so the first entry
    /// has positive leading coefficient.
    pub fn normalize_content(&mut self) {
        if self.entries.is_empty() {
            return;
        }
        let mut poly_gcd = ParamScalar::zero();
        for (_, c) in &self.entries {
            poly_gcd = if poly_gcd.is_zero() { c.clone() } else { poly_gcd.gcd(c) };
            if poly_gcd.degree() == Some(0) {
                break;
            }
        }
        if poly_gcd.degree().unwrap_or(0) > 0 {
            for (_, c) in &mut self.entries {
                *c = c.div_exact(&poly_gcd).expect("gcd divides");
            }
        }
        let mut content = Rat::zero();
        for (_, c) in &self.entries {
            let rc = c.rational_content();
            content = if content.is_zero() {
                rc
            } else {
                gcd_rat(&content, &rc)
            };
        }
        if self.entries[0].1.leading_coeff().is_negative() {
            content = -content;
        }
        if !content.is_one() && !content.is_zero() {
            let inv = Rat::one() / content;
            for (_, c) in &mut self.entries {
                *c = c.scale(&inv);
            }
        }
    }
}

fn gcd_rat(a: &Rat, b: &Rat) -> Rat {
    use num_integer::Integer;
    Rat::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

/// Reduced row echelon basis of a subspace, rows sorted by pivot column.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Echelon {
    rows: Vec<SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<SparseRow>) -> Self {
        let mut e = Echelon::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.pivot().unwrap())
    }

    fn pivot_position(&self, col: usize) -> Option<usize> {
        self.rows.binary_search_by_key(&col, |r| r.pivot().unwrap()).ok()
    }

    /// Reduce a row against the basis until it has no support on any pivot
    /// column.  The basis is fully reduced, so each elimination step removes
    /// one pivot column and introduces none.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let hit = row
                .columns()
                .find_map(|c| self.pivot_position(c).map(|i| (c, i)));
            let Some((col, i)) = hit else { return row };
            let a = self.rows[i].get(col);
            let b = row.get(col).neg();
            row = row.combine(&a, &self.rows[i], &b);
            row.normalize_content();
        }
    }

    /// Insert a row, returning true when it enlarged the span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        row.normalize_content();
        let Some(p) = row.pivot() else { return false };
        // Back-substitute into earlier rows to keep the basis fully reduced.
        let idx = self.rows.partition_point(|r| r.pivot().unwrap() < p);
        for i in 0..self.rows.len() {
            let c = self.rows[i].get(p);
            if !c.is_zero() {
                let a = row.get(p);
                let mut nr = self.rows[i].combine(&a, &row, &c.neg());
                nr.normalize_content();
                self.rows[i] = nr;
            }
        }
        self.rows.insert(idx, row);
        true
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone()).is_zero()
    }

    /// Subspace equality via matching pivots and mutual reduction.
    pub fn same_space(&self, other: &Echelon) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Solution basis of `sum_j x_j col_j = 0` for the matrix whose columns
    /// are the given rows (i.e. a kernel of the transpose): row-reduce
    /// `[rows | I]` and collect the identity parts of vanished rows.
    pub fn kernel_of_rows(rows: &[SparseRow], width: usize) -> Vec<SparseRow> {
        let n = rows.len();
        let mut aug = Echelon::new();
        let mut kernel = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            // Augmented row: [r | e_i] with the identity block shifted by `width`.
            let mut entries: Vec<(usize, ParamScalar)> = r.entries().to_vec();
            entries.push((width + i, ParamScalar::one()));
            let mut reduced = aug.reduce(SparseRow::new(entries));
            reduced.normalize_content();
            match reduced.pivot() {
                Some(p) if p < width => {
                    aug.insert(reduced);
                }
                Some(_) => {
                    // Left block vanished: identity part is a kernel vector.
                    kernel.push(reduced.map_columns(|j| j - width));
                }
                None => unreachable!("augmented row cannot vanish"),
            }
        }
        let _ = n;
        kernel
    }
}

/// Dimension of the intersection of two row spaces (over the fraction
/// field), via kernel of the stacked basis.
pub fn intersect_rowspaces(a: &Echelon, b: &Echelon) -> Echelon {
    let mut stacked: Vec<SparseRow> = a.rows().to_vec();
    stacked.extend(b.rows().iter().cloned());
    let width = stacked
        .iter()
        .flat_map(|r| r.columns())
        .max()
        .map_or(0, |m| m + 1);
    let kernel = Echelon::kernel_of_rows(&stacked, width);
    let mut out = Echelon::new();
    for k in kernel {
        // k = (alpha | beta) with alpha against a-rows: intersection vector
        // = sum alpha_i a_i.
        let mut v = SparseRow::default();
        for (j, c) in k.entries() {
            if *j < a.dim() {
                v = v.combine(&ParamScalar::one(), &a.rows()[*j].scale(c), &ParamScalar::one());
            }
        }
        v.normalize_content();
        out.insert(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn c(v: i64) -> ParamScalar {
        ParamScalar::int(v)
    }

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        SparseRow::new(entries.iter().map(|&(j, v)| (j, c(v))).collect())
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(row(&[(0, 1), (2, 1)])));
        assert!(e.insert(row(&[(1, 2)])));
        assert!(!e.insert(row(&[(0, 2), (1, 2), (2, 2)])));
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&row(&[(0, 3), (2, 3)])));
        assert!(!e.contains(&row(&[(2, 1)])));
    }

    #[test]
    fn parameter_pivots_normalize() {
        // Rows A*e0 + e1 and e1: reduced basis must be e0, e1.
        let a = SparseRow::new(vec![(0, ParamScalar::param()), (1, c(1))]);
        let mut e = Echelon::new();
        e.insert(a);
        e.insert(row(&[(1, 1)]));
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&row(&[(0, 1)])));
        // Content normalization strips the parameter factor.
        assert_eq!(e.rows()[0], row(&[(0, 1)]));
    }

    #[test]
    fn kernel_of_rows_finds_relations() {
        // Columns of M are r0, r1, r2 with r2 = r0 + r1.
        let rows = vec![row(&[(0, 1)]), row(&[(1, 1)]), row(&[(0, 1), (1, 1)])];
        let kernel = Echelon::kernel_of_rows(&rows, 2);
        assert_eq!(kernel.len(), 1);
        let k = &kernel[0];
        // x0*r0 + x1*r1 + x2*r2 = 0 => (1, 1, -1) up to scale.
        let v0 = k.get(0);
        let v2 = k.get(2);
        assert_eq!(v0.constant_coeff() + v2.constant_coeff(), rat(0));
    }

    #[test]
    fn rowspace_intersection() {
        // <e0+e1, e2> meets <e1, e2> in <e1... wait: e0+e1 not in second.
        // Intersection = <e2>.
        let a = Echelon::from_rows(vec![row(&[(0, 1), (1, 1)]), row(&[(2, 1)])]);
        let b = Echelon::from_rows(vec![row(&[(1, 1)]), row(&[(2, 1)])]);
        let i = intersect_rowspaces(&a, &b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&row(&[(2, 5)])));
    }
}
