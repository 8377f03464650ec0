use crate::linalg::{Echelon, SparseRow};
use crate::ring::{Monomial, ParamForm, ParamScalar, RingSpec};
use std::collections::HashMap;

/// Bidirectional map between the monomials of one degree and column
/// indices, in the fixed graded-lex (first variable largest) order.
#[derive(Debug, Clone)]
pub struct ColumnIndex {
    ring: RingSpec,
    degree: u32,
    monos: Vec<Monomial>,
    index: HashMap<Vec<u32>, usize>,
}

impl ColumnIndex {
    pub fn new(ring: &RingSpec, degree: u32) -> Self {
        let monos = ring.monomials(degree);
        let index = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.exponents().to_vec(), i))
            .collect();
        ColumnIndex { ring: ring.clone(), degree, monos, index }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomial(&self, col: usize) -> &Monomial {
        &self.monos[col]
    }

    pub fn index_of(&self, m: &Monomial) -> usize {
        self.index[m.exponents()]
    }

    pub fn row_of_form(&self, f: &ParamForm) -> SparseRow {
        debug_assert_eq!(f.degree(), self.degree);
        SparseRow::new(f.terms().map(|(m, c)| (self.index_of(&m), c.clone())).collect())
    }

    pub fn form_of_row(&self, row: &SparseRow) -> ParamForm {
        let terms = row
            .entries()
            .iter()
            .map(|(j, c)| (self.monos[*j].clone(), c.clone()))
            .collect();
        ParamForm::from_terms(&self.ring, terms).expect("slice rows are homogeneous")
    }
}

/// An echelonized basis of a subspace of one graded slice.
#[derive(Debug, Clone)]
pub struct DegreePiece {
    ring: RingSpec,
    degree: u32,
    ech: Echelon,
}

impl DegreePiece {
    pub fn from_echelon(ring: &RingSpec, degree: u32, ech: Echelon) -> Self {
        DegreePiece { ring: ring.clone(), degree, ech }
    }

    pub fn from_monomials(ring: &RingSpec, degree: u32, monos: Vec<Monomial>) -> Self {
        let cols = ColumnIndex::new(ring, degree);
        let rows = monos.iter().map(|m| SparseRow::unit(cols.index_of(m))).collect();
        DegreePiece { ring: ring.clone(), degree, ech: Echelon::from_rows(rows) }
    }

    pub fn from_forms(ring: &RingSpec, degree: u32, forms: &[ParamForm]) -> Self {
        let cols = ColumnIndex::new(ring, degree);
        let rows = forms.iter().map(|f| cols.row_of_form(f)).collect();
        DegreePiece { ring: ring.clone(), degree, ech: Echelon::from_rows(rows) }
    }

    pub fn empty(ring: &RingSpec, degree: u32) -> Self {
        DegreePiece { ring: ring.clone(), degree, ech: Echelon::new() }
    }

    pub fn full(ring: &RingSpec, degree: u32) -> Self {
        DegreePiece::from_monomials(ring, degree, ring.monomials(degree))
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn columns(&self) -> ColumnIndex {
        ColumnIndex::new(&self.ring, self.degree)
    }

    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }

    pub fn rows(&self) -> &[SparseRow] {
        self.ech.rows()
    }

    pub fn basis_forms(&self) -> Vec<ParamForm> {
        let cols = self.columns();
        self.ech.rows().iter().map(|r| cols.form_of_row(r)).collect()
    }

    pub fn contains_row(&self, row: &SparseRow) -> bool {
        self.ech.contains(row)
    }

    pub fn contains_form(&self, f: &ParamForm) -> bool {
        if f.is_zero() {
            return true;
        }
        if f.degree() != self.degree {
            return false;
        }
        self.contains_row(&self.columns().row_of_form(f))
    }

    pub fn reduce_row(&self, row: SparseRow) -> SparseRow {
        self.ech.reduce(row)
    }

    pub fn same_space(&self, other: &DegreePiece) -> bool {
        self.degree == other.degree && self.ech.same_space(&other.ech)
    }

    pub fn is_subspace_of(&self, other: &DegreePiece) -> bool {
        self.ech.rows().iter().all(|r| other.ech.contains(r))
    }

    /// All products basis-row times variable, as rows of degree+1.
    pub fn multiplied_by_variables(&self) -> Vec<SparseRow> {
        let up = ColumnIndex::new(&self.ring, self.degree + 1);
        let cols = self.columns();
        let nv = self.ring.nvars();
        let mut out = Vec::with_capacity(self.dim() * nv);
        for r in self.ech.rows() {
            for v in 0..nv {
                let xv = Monomial::var_pow(nv, v, 1);
                let entries = r
                    .entries()
                    .iter()
                    .map(|(j, c)| (up.index_of(&cols.monomial(*j).mul(&xv)), c.clone()))
                    .collect();
                out.push(SparseRow::new(entries));
            }
        }
        out
    }

    /// The slice spanned by `S_1 * self` inside degree+1.
    pub fn grown_by_one(&self) -> DegreePiece {
        let ech = Echelon::from_rows(self.multiplied_by_variables());
        DegreePiece::from_echelon(&self.ring, self.degree + 1, ech)
    }

    /// Apply a linear substitution to every basis row and re-echelonize.
    pub fn substituted(&self, images: &[Vec<ParamScalar>]) -> DegreePiece {
        let forms: Vec<ParamForm> =
            self.basis_forms().iter().map(|f| f.substitute_linear(images)).collect();
        DegreePiece::from_forms(&self.ring, self.degree, &forms)
    }

    pub fn intersect(&self, other: &DegreePiece) -> DegreePiece {
        assert_eq!(self.degree, other.degree);
        let ech = crate::linalg::intersect_rowspaces(&self.ech, &other.ech);
        DegreePiece::from_echelon(&self.ring, self.degree, ech)
    }

    pub fn intersect_all(pieces: &[DegreePiece]) -> DegreePiece {
        let mut it = pieces.iter();
        let first = it.next().expect("nonempty intersection list").clone();
        it.fold(first, |acc, p| acc.intersect(p))
    }

    /// Dimension of the intersection with the coordinate subspace spanned
    /// by the monomials selected by `keep`.  Computed by re-echelonizing
    /// with the non-kept columns first: rows whose pivot falls in the kept
    /// block have support entirely inside it.
    pub fn coordinate_intersection(&self, keep: impl Fn(&Monomial) -> bool) -> DegreePiece {
        let cols = self.columns();
        let n = cols.len();
        let mut order: Vec<usize> = (0..n).collect();
        // Stable partition: non-kept columns first.
        order.sort_by_key(|&j| keep(cols.monomial(j)));
        let mut perm = vec![0usize; n];
        let mut inv = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
            inv[new] = old;
        }
        let split = order.iter().position(|&j| keep(cols.monomial(j))).unwrap_or(n);
        let rows: Vec<SparseRow> =
            self.ech.rows().iter().map(|r| r.map_columns(|j| perm[j])).collect();
        let ech = Echelon::from_rows(rows);
        let kept: Vec<SparseRow> = ech
            .rows()
            .iter()
            .filter(|r| r.pivot().unwrap() >= split)
            .map(|r| r.map_columns(|j| inv[j]))
            .collect();
        DegreePiece::from_echelon(&self.ring, self.degree, Echelon::from_rows(kept))
    }

    /// True when every basis row is a single monomial.
    pub fn is_monomial_span(&self) -> bool {
        self.ech.rows().iter().all(|r| r.entries().len() == 1 && r.entries()[0].1.is_constant())
    }

    pub fn monomial_support(&self) -> Vec<Monomial> {
        let cols = self.columns();
        let mut out: Vec<Monomial> = self
            .ech
            .rows()
            .iter()
            .flat_map(|r| r.columns())
            .map(|j| cols.monomial(j).clone())
            .collect();
        out.sort_by(|a, b| b.cmp_grlex(a));
        out.dedup();
        out
    }
}
