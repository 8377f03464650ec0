//! Parameter degree of the top exterior power of a matrix over the
//! parameter polynomial ring: the maximal parameter degree over all
//! maximal minors minus the valuation of their gcd.  This is the degree of
//! the orbit-closure curve under the Plücker embedding.
//!
//! Three routes:
//! * greedy (diagonal actions): the minors of `M * diag(A^w)` have degree
//!   `sum of selected column weights`, so the spread is max-weight basis
//!   minus min-weight basis of the column matroid;
//! * projection: `det(M(A) * R)` for random integer matrices `R` expands
//!   over maximal minors (Cauchy–Binet), so its degree and valuation agree
//!   with the spread for generic `R`; three independent draws must agree;
//! * exhaustive: enumerate all maximal minors.
//!
//! The rows are first split into column-disjoint blocks; minors factor
//! through the blocks, so the spread is the sum of the blockwise spreads.

use crate::linalg::{Echelon, SparseRow};
use crate::ring::{rat, ParamScalar, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Max minor degree minus gcd valuation for the row space given by `rows`
/// (must have full row rank over the parameter field).  Blocks are solved
/// with the exhaustive route when small and the projection route
/// otherwise.
pub fn wedge_alpha_degree(rows: &[SparseRow], seed: u64) -> Result<u64> {
    let mut total = 0u64;
    for block in split_blocks(rows) {
        total += block_degree(&block, seed)?;
    }
    Ok(total)
}

fn block_degree(rows: &[SparseRow], seed: u64) -> Result<u64> {
    if rows.iter().all(|r| r.entries().iter().all(|(_, c)| c.is_constant())) {
        // Parameter-free block: all minors are constants.
        return Ok(0);
    }
    let cols = block_columns(rows);
    let m = rows.len();
    if binom_small(cols.len(), m).is_some_and(|b| b <= 5_000) {
        wedge_exhaustive(rows)
    } else {
        wedge_projection(rows, seed)
    }
}

/// Partition the rows into groups with pairwise disjoint column support.
pub fn split_blocks(rows: &[SparseRow]) -> Vec<Vec<SparseRow>> {
    let mut parent: Vec<usize> = (0..rows.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let mut owner: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for (i, r) in rows.iter().enumerate() {
        for c in r.columns() {
            match owner.entry(c) {
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(i);
                }
                std::collections::hash_map::Entry::Occupied(o) => {
                    let a = find(&mut parent, *o.get());
                    let b = find(&mut parent, i);
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<SparseRow>> =
        std::collections::BTreeMap::new();
    for (i, r) in rows.iter().enumerate() {
        groups.entry(find(&mut parent, i)).or_default().push(r.clone());
    }
    groups.into_values().collect()
}

fn block_columns(rows: &[SparseRow]) -> Vec<usize> {
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.columns()).collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

fn binom_small(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let mut acc: u64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul((n - i) as u64)? / (i as u64 + 1);
        if acc > 1_000_000 {
            return None;
        }
    }
    Some(acc)
}

/// Exhaustive route: enumerate all maximal minors.
pub fn wedge_exhaustive(rows: &[SparseRow]) -> Result<u64> {
    let cols = block_columns(rows);
    let m = rows.len();
    if cols.len() < m {
        return Err(Error::RankDeficient(format!(
            "{} rows on {} columns",
            m,
            cols.len()
        )));
    }
    let col_pos: std::collections::HashMap<usize, usize> =
        cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let dense: Vec<Vec<ParamScalar>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![ParamScalar::zero(); cols.len()];
            for (j, c) in r.entries() {
                v[col_pos[j]] = c.clone();
            }
            v
        })
        .collect();
    let mut max_deg: Option<usize> = None;
    let mut min_val: Option<usize> = None;
    let mut select = (0..m).collect::<Vec<usize>>();
    loop {
        let minor = det_param(&dense, &select);
        if !minor.is_zero() {
            let d = minor.degree().unwrap();
            let v = minor.valuation().unwrap();
            max_deg = Some(max_deg.map_or(d, |x| x.max(d)));
            min_val = Some(min_val.map_or(v, |x| x.min(v)));
        }
        // Next m-combination of columns.
        let mut i = m;
        loop {
            if i == 0 {
                match (max_deg, min_val) {
                    (Some(d), Some(v)) => return Ok((d - v) as u64),
                    _ => {
                        return Err(Error::RankDeficient("all maximal minors vanish".into()))
                    }
                }
            }
            i -= 1;
            if select[i] != i + cols.len() - m {
                select[i] += 1;
                for k in i + 1..m {
                    select[k] = select[k - 1] + 1;
                }
                break;
            }
        }
    }
}

// Fraction-free determinant of the selected column submatrix.
fn det_param(dense: &[Vec<ParamScalar>], select: &[usize]) -> ParamScalar {
    let m = select.len();
    let mut a: Vec<Vec<ParamScalar>> = dense
        .iter()
        .map(|row| select.iter().map(|&j| row[j].clone()).collect())
        .collect();
    // Bareiss elimination.
    let mut denom = ParamScalar::one();
    let mut sign = false;
    for k in 0..m {
        let Some(p) = (k..m).find(|&r| !a[r][k].is_zero()) else {
            return ParamScalar::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for r in k + 1..m {
            for c in k + 1..m {
                let num = a[k][k].mul(&a[r][c]).sub(&a[r][k].mul(&a[k][c]));
                a[r][c] = num.div_exact(&denom).expect("Bareiss divisibility");
            }
            a[r][k] = ParamScalar::zero();
        }
        denom = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Projection route: interpolate `det(M(A) R)` for random `R`; three
/// independent draws must agree on degree and valuation.
pub fn wedge_projection(rows: &[SparseRow], seed: u64) -> Result<u64> {
    let cols = block_columns(rows);
    let m = rows.len();
    if cols.len() < m {
        return Err(Error::RankDeficient(format!("{} rows on {} columns", m, cols.len())));
    }
    let max_entry_deg = rows
        .iter()
        .flat_map(|r| r.entries().iter().map(|(_, c)| c.degree().unwrap_or(0)))
        .max()
        .unwrap_or(0);
    let bound = m * max_entry_deg;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x77_65_64_67_65);
    let mut agreed: Option<(usize, usize)> = None;
    let mut agreements = 0;
    for _attempt in 0..12 {
        let proj: Vec<Vec<i64>> = (0..cols.len())
            .map(|_| (0..m).map(|_| rng.gen_range(-99..=99)).collect())
            .collect();
        // Sample det at bound+1 parameter values and interpolate.
        let mut samples: Vec<(i64, Rat)> = Vec::with_capacity(bound + 1);
        for s in 0..=bound as i64 {
            let alpha = rat(s);
            let mat: Vec<Vec<Rat>> = rows
                .iter()
                .map(|r| {
                    let mut out = vec![rat(0); m];
                    for (j, c) in r.entries() {
                        let pos = cols.binary_search(j).unwrap();
                        let v = c.evaluate(&alpha);
                        if !v.is_zero() {
                            for (t, slot) in out.iter_mut().enumerate() {
                                let add = &v * rat(proj[pos][t]);
                                *slot += add;
                            }
                        }
                    }
                    out
                })
                .collect();
            samples.push((s, det_rat(mat)));
        }
        let poly = poly_from_samples(&samples);
        if poly.iter().all(|c| c.is_zero()) {
            continue; // unlucky projection killed the rank
        }
        let deg = poly.iter().rposition(|c| !c.is_zero()).unwrap();
        let val = poly.iter().position(|c| !c.is_zero()).unwrap();
        match agreed {
            Some(prev) if prev == (deg, val) => {
                agreements += 1;
                if agreements >= 3 {
                    return Ok((deg - val) as u64);
                }
            }
            Some(_) => {
                // Conflicting draws: degrees only grow toward the truth,
                // keep the larger spread and reset the agreement count.
                let prev = agreed.unwrap();
                let better = if deg - val > prev.0 - prev.1 { (deg, val) } else { prev };
                agreed = Some(better);
                agreements = 1;
            }
            None => {
                agreed = Some((deg, val));
                agreements = 1;
            }
        }
    }
    Err(Error::ProjectionUnstable(format!(
        "projections failed to agree three times (best: {:?})",
        agreed
    )))
}

fn det_rat(mut a: Vec<Vec<Rat>>) -> Rat {
    let m = a.len();
    let mut det = rat(1);
    for k in 0..m {
        let Some(p) = (k..m).find(|&r| !a[r][k].is_zero()) else {
            return rat(0);
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k].clone();
        for r in k + 1..m {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &a[k][k];
            for c in k..m {
                let s = &f * &a[k][c];
                a[r][c] -= s;
            }
        }
    }
    det
}

fn poly_from_samples(samples: &[(i64, Rat)]) -> Vec<Rat> {
    // Newton interpolation; abscissas 0..=n distinct.
    let n = samples.len();
    let mut dd: Vec<Rat> = samples.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = rat(samples[i].0 - samples[i - level].0);
            dd[i] = num / den;
        }
    }
    let mut power = vec![rat(0); n];
    let mut basis = vec![rat(0); n];
    basis[0] = rat(1);
    let mut blen = 1;
    for (i, c) in dd.iter().enumerate() {
        for j in 0..blen {
            power[j] += c * &basis[j];
        }
        if i + 1 < n {
            let xi = rat(samples[i].0);
            for j in (0..blen).rev() {
                let b = basis[j].clone();
                basis[j + 1] += &b;
                basis[j] = -(b * &xi);
            }
            blen += 1;
        }
    }
    power
}

/// Greedy route for diagonal actions: select a maximal independent column
/// set of maximal (resp. minimal) total weight; returns the spread.
pub fn wedge_diagonal_greedy(rows: &[SparseRow], col_weight: impl Fn(usize) -> i64) -> Result<u64> {
    let m = rows.len();
    if m == 0 {
        return Ok(0);
    }
    let cols = block_columns(rows);
    // Column vectors of the m x N matrix.
    let mut colvec: std::collections::HashMap<usize, Vec<(usize, ParamScalar)>> =
        std::collections::HashMap::new();
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in r.entries() {
            colvec.entry(*j).or_default().push((i, c.clone()));
        }
    }
    let pick = |descending: bool| -> Result<i64> {
        let mut order = cols.clone();
        order.sort_by_key(|&j| if descending { -col_weight(j) } else { col_weight(j) });
        let mut ech = Echelon::new();
        let mut total = 0i64;
        for j in order {
            if ech.dim() == m {
                break;
            }
            let v = SparseRow::new(colvec[&j].clone());
            if ech.insert(v) {
                total += col_weight(j);
            }
        }
        if ech.dim() < m {
            return Err(Error::RankDeficient(format!("rank {} < {} rows", ech.dim(), m)));
        }
        Ok(total)
    };
    let hi = pick(true)?;
    let lo = pick(false)?;
    Ok((hi - lo) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> ParamScalar {
        ParamScalar::int(v)
    }

    fn a_row(entries: &[(usize, (i64, i64))]) -> SparseRow {
        // entry (j, (c0, c1)) = c0 + c1*A at column j
        SparseRow::new(
            entries
                .iter()
                .map(|&(j, (c0, c1))| {
                    (j, ParamScalar::from_coeffs(vec![rat(c0), rat(c1)]))
                })
                .collect(),
        )
    }

    #[test]
    fn single_invariant_line_has_degree_zero() {
        let rows = vec![SparseRow::new(vec![(0, c(1))])];
        assert_eq!(wedge_alpha_degree(&rows, 1).unwrap(), 0);
    }

    #[test]
    fn monomial_track_spread() {
        // Rows A e_i + e_{i+1}, i = 0..3: bidiagonal, minors have degrees
        // 0..=3 wait: 4 rows on 5 columns, minor degrees 0..4: spread 4.
        let rows: Vec<SparseRow> =
            (0..4).map(|i| a_row(&[(i, (0, 1)), (i + 1, (1, 0))])).collect();
        assert_eq!(wedge_exhaustive(&rows).unwrap(), 4);
        assert_eq!(wedge_alpha_degree(&rows, 5).unwrap(), 4);
        assert_eq!(wedge_projection(&rows, 5).unwrap(), 4);
    }

    #[test]
    fn greedy_matches_exhaustive_on_diagonal_instances() {
        // Parameter-free matrix with column weights: spread over bases.
        let rows = vec![
            SparseRow::new(vec![(0, c(1)), (1, c(1)), (3, c(2))]),
            SparseRow::new(vec![(1, c(1)), (2, c(1))]),
        ];
        let w = [0i64, 1, 2, 5];
        let spread = wedge_diagonal_greedy(&rows, |j| w[j]).unwrap();
        // Scaled matrix: entry (i,j) *= A^w[j]; exhaustively:
        let scaled: Vec<SparseRow> = rows
            .iter()
            .map(|r| {
                SparseRow::new(
                    r.entries()
                        .iter()
                        .map(|(j, cc)| {
                            let mut coeffs = vec![rat(0); w[*j] as usize + 1];
                            coeffs[w[*j] as usize] = rat(1);
                            (*j, cc.mul(&ParamScalar::from_coeffs(coeffs)))
                        })
                        .collect(),
                )
            })
            .collect();
        assert_eq!(spread, wedge_exhaustive(&scaled).unwrap());
    }

    #[test]
    fn rank_deficiency_reported() {
        let rows = vec![
            SparseRow::new(vec![(0, c(1)), (1, c(1))]),
            SparseRow::new(vec![(0, c(2)), (1, c(2))]),
        ];
        assert!(matches!(wedge_exhaustive(&rows), Err(Error::RankDeficient(_))));
    }

    #[test]
    fn projection_matches_exhaustive_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for trial in 0..25 {
            let n = rng.gen_range(3..=8usize);
            let m = rng.gen_range(1..=n.min(4));
            let rows: Vec<SparseRow> = (0..m)
                .map(|_| {
                    SparseRow::new(
                        (0..n)
                            .filter_map(|j| {
                                if rng.gen_bool(0.6) {
                                    let c0 = rng.gen_range(-3..=3);
                                    let c1 = rng.gen_range(-3..=3);
                                    let s = ParamScalar::from_coeffs(vec![rat(c0), rat(c1)]);
                                    if s.is_zero() {
                                        None
                                    } else {
                                        Some((j, s))
                                    }
                                } else {
                                    None
                                }
                            })
                            .collect(),
                    )
                })
                .collect();
            if rows.iter().any(|r| r.is_zero()) {
                continue;
            }
            let exh = wedge_exhaustive(&rows);
            let proj = wedge_projection(&rows, trial);
            match exh {
                Ok(v) => assert_eq!(proj.unwrap(), v, "trial {trial}"),
                Err(_) => assert!(proj.is_err(), "trial {trial}"),
            }
        }
    }
}
