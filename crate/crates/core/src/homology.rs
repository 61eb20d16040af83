//! Boundary matrices and Betti numbers over GF(2) and over the integers,
//! plus a per-component dimension census.
//!
//! GF(2) ranks come from bit-packed Gaussian elimination and are the
//! default. Integer homology uses Smith normal form with smallest-magnitude
//! pivoting; if 64-bit arithmetic overflows, the computation is redone in
//! arbitrary precision.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, VertexId};

/// Coefficient ring selector for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientMode {
    /// Ranks over the two-element field; fast and torsion-free.
    Gf2,
    /// Smith normal form over the integers; reports torsion.
    Integer,
}

/// The matrix of the boundary map from k-chains to (k-1)-chains.
///
/// Rows are the (k-1)-simplexes and columns the k-simplexes, both in
/// canonical lexicographic order. The column of [v0 < ... < vk] holds
/// (-1)^i at the row of the face omitting vi (1 in GF(2) mode).
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub k: usize,
    pub mode: CoefficientMode,
    pub rows: Vec<Simplex>,
    pub cols: Vec<Simplex>,
    entries: Vec<i8>,
}

impl BoundaryMatrix {
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.cols.len() + col]
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols.len()
    }

    /// Rank in the matrix's own coefficient ring.
    pub fn rank(&self) -> usize {
        match self.mode {
            CoefficientMode::Gf2 => gf2_rank(self.pack_gf2(), self.cols.len()),
            CoefficientMode::Integer => self.invariant_factors().len(),
        }
    }

    /// Nonzero diagonal of the Smith normal form, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<BigUint> {
        let m: Vec<Vec<i64>> = (0..self.rows.len())
            .map(|r| (0..self.cols.len()).map(|c| i64::from(self.entry(r, c))).collect())
            .collect();
        match smith_normal_form(m) {
            Some(diag) => diag.into_iter().map(|d| BigUint::from(d as u64)).collect(),
            None => {
                let m: Vec<Vec<BigInt>> = (0..self.rows.len())
                    .map(|r| {
                        (0..self.cols.len())
                            .map(|c| BigInt::from(self.entry(r, c)))
                            .collect()
                    })
                    .collect();
                smith_normal_form(m)
                    .expect("big integer arithmetic cannot overflow")
                    .into_iter()
                    .map(|d| d.to_biguint().expect("factors are non-negative"))
                    .collect()
            }
        }
    }

    /// The product self * next in the matrices' coefficient ring (entries
    /// reduced mod 2 in GF(2) mode), row-major. Zero everywhere iff the two
    /// maps compose to the zero map.
    pub fn multiply(&self, next: &BoundaryMatrix) -> Vec<i64> {
        assert_eq!(self.cols.len(), next.rows.len(), "inner dimensions must agree");
        assert_eq!(self.mode, next.mode, "coefficient modes must agree");
        let mut out = vec![0i64; self.rows.len() * next.cols.len()];
        for r in 0..self.rows.len() {
            for m in 0..self.cols.len() {
                let a = i64::from(self.entry(r, m));
                if a == 0 {
                    continue;
                }
                for c in 0..next.cols.len() {
                    out[r * next.cols.len() + c] += a * i64::from(next.entry(m, c));
                }
            }
        }
        if self.mode == CoefficientMode::Gf2 {
            for x in &mut out {
                *x %= 2;
            }
        }
        out
    }

    fn pack_gf2(&self) -> Vec<Vec<u64>> {
        let words = self.cols.len().div_ceil(64);
        (0..self.rows.len())
            .map(|r| {
                let mut row = vec![0u64; words];
                for c in 0..self.cols.len() {
                    if self.entry(r, c) != 0 {
                        row[c / 64] |= 1u64 << (c % 64);
                    }
                }
                row
            })
            .collect()
    }
}

/// Builds the boundary matrix of dimension k (k >= 1). When k exceeds the
/// complex dimension the matrix has zero columns.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize, mode: CoefficientMode) -> BoundaryMatrix {
    assert!(k >= 1, "boundary maps start at dimension 1");
    let rows: Vec<Simplex> = c.simplexes_of_dim(k - 1).cloned().collect();
    let cols: Vec<Simplex> = c.simplexes_of_dim(k).cloned().collect();
    let row_index: BTreeMap<&Simplex, usize> =
        rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut entries = vec![0i8; rows.len() * cols.len()];
    for (j, s) in cols.iter().enumerate() {
        for (omit, face) in s.faces().iter().enumerate() {
            let i = row_index[face];
            entries[i * cols.len() + j] = match mode {
                CoefficientMode::Gf2 => 1,
                CoefficientMode::Integer => {
                    if omit % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                }
            };
        }
    }
    BoundaryMatrix {
        k,
        mode,
        rows,
        cols,
        entries,
    }
}

/// Betti numbers indexed by homology dimension, length = complex dimension
/// plus one (empty for the empty complex). `torsion` is present in integer
/// mode: torsion[k] lists the invariant factors above 1 of the k-th group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub betti: Vec<usize>,
    pub torsion: Option<Vec<Vec<BigUint>>>,
}

impl BettiVector {
    /// betti[k], reading 0 above the top dimension.
    pub fn get(&self, k: usize) -> usize {
        self.betti.get(k).copied().unwrap_or(0)
    }

    /// Alternating sum, which over a field equals the Euler characteristic.
    pub fn alternating_sum(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Betti numbers via b_k = f_k - rank del_k - rank del_{k+1}.
pub fn betti_numbers(c: &SimplicialComplex, mode: CoefficientMode) -> BettiVector {
    if c.is_empty() {
        return BettiVector {
            betti: Vec::new(),
            torsion: match mode {
                CoefficientMode::Gf2 => None,
                CoefficientMode::Integer => Some(Vec::new()),
            },
        };
    }
    let top = c.dimension() as usize;
    let f = c.f_vector();
    // ranks[k] = rank of del_k for k in 0..=top+1; del_0 and del_{top+1} are zero maps
    let mut ranks = vec![0usize; top + 2];
    let mut factors: Vec<Vec<BigUint>> = vec![Vec::new(); top + 2];
    for k in 1..=top {
        let m = boundary_matrix(c, k, mode);
        match mode {
            CoefficientMode::Gf2 => ranks[k] = m.rank(),
            CoefficientMode::Integer => {
                let inv = m.invariant_factors();
                ranks[k] = inv.len();
                factors[k] = inv;
            }
        }
    }
    let betti: Vec<usize> = (0..=top)
        .map(|k| {
            f[k].checked_sub(ranks[k] + ranks[k + 1])
                .expect("rank bound violated")
        })
        .collect();
    let torsion = match mode {
        CoefficientMode::Gf2 => None,
        CoefficientMode::Integer => Some(
            (0..=top)
                .map(|k| {
                    factors[k + 1]
                        .iter()
                        .filter(|d| **d > BigUint::from(1u8))
                        .cloned()
                        .collect()
                })
                .collect(),
        ),
    };
    BettiVector { betti, torsion }
}

/// One connected component's summary: smallest vertex id, vertex count,
/// top simplex dimension, and f-vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCensus {
    pub id: VertexId,
    pub vertex_count: usize,
    pub max_dimension: i32,
    pub f_vector: Vec<usize>,
}

/// Per-component structure report, sorted by smallest vertex id. Components
/// are 1-skeleton connectivity classes; every higher simplex lies inside
/// one class because its edges are present by closure.
pub fn dimension_census(c: &SimplicialComplex) -> Vec<ComponentCensus> {
    let classes = c.vertex_components();
    let mut class_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, class) in classes.iter().enumerate() {
        for v in class {
            class_of.insert(*v, i);
        }
    }
    let mut f_vectors: Vec<Vec<usize>> = vec![Vec::new(); classes.len()];
    for s in c.simplexes() {
        let i = class_of[&s.vertices()[0]];
        let k = s.dimension();
        if f_vectors[i].len() <= k {
            f_vectors[i].resize(k + 1, 0);
        }
        f_vectors[i][k] += 1;
    }
    classes
        .iter()
        .zip(f_vectors)
        .map(|(class, f_vector)| ComponentCensus {
            id: class[0],
            vertex_count: class.len(),
            max_dimension: f_vector.len() as i32 - 1,
            f_vector,
        })
        .collect()
}

/// Rank of a GF(2) matrix given as bit-packed rows.
fn gf2_rank(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let word = col / 64;
        let bit = 1u64 << (col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][word] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail {
            if row[word] & bit != 0 {
                for (a, b) in row.iter_mut().zip(pivot_row) {
                    *a ^= *b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Diagonal of the Smith normal form: positive invariant factors, each
/// dividing the next. Pivots on the smallest nonzero magnitude to control
/// entry growth. Returns None if any checked operation overflows.
fn smith_normal_form<T>(mut m: Vec<Vec<T>>) -> Option<Vec<T>>
where
    T: Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Clone,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_magnitude_entry(&m, t, rows, cols) else {
            break;
        };
        m.swap(t, pi);
        swap_cols(&mut m, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = m[i][t].clone() / m[t][t].clone();
                    row_subtract(&mut m, i, t, &q, t)?;
                    // a truncated-division remainder is strictly smaller,
                    // so promoting it to pivot makes progress
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = m[t][j].clone() / m[t][t].clone();
                    col_subtract(&mut m, j, t, &q, t)?;
                    if !m[t][j].is_zero() {
                        swap_cols(&mut m, t, j);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // row and column are clear; enforce that the pivot divides the
            // rest of the submatrix before moving on
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(m[i][j].clone() % m[t][t].clone()).is_zero());
            match offender {
                Some((i, _)) => {
                    for j in t..cols {
                        let sum = m[t][j].checked_add(&m[i][j])?;
                        m[t][j] = sum;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    Some(diag)
}

fn min_magnitude_entry<T: Integer + Signed>(
    m: &[Vec<T>],
    t: usize,
    rows: usize,
    cols: usize,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..rows {
        for j in t..cols {
            if m[i][j].is_zero() {
                continue;
            }
            best = match best {
                Some((bi, bj)) if m[bi][bj].abs() <= m[i][j].abs() => Some((bi, bj)),
                _ => Some((i, j)),
            };
        }
    }
    best
}

fn swap_cols<T>(m: &mut [Vec<T>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m {
        row.swap(a, b);
    }
}

/// row_i -= q * row_t over columns from..end. Checked.
fn row_subtract<T>(m: &mut [Vec<T>], i: usize, t: usize, q: &T, from: usize) -> Option<()>
where
    T: Integer + CheckedSub + CheckedMul + Clone,
{
    if q.is_zero() {
        return Some(());
    }
    for j in from..m[t].len() {
        let prod = q.checked_mul(&m[t][j])?;
        m[i][j] = m[i][j].checked_sub(&prod)?;
    }
    Some(())
}

/// col_j -= q * col_t over rows from..end. Checked.
fn col_subtract<T>(m: &mut [Vec<T>], j: usize, t: usize, q: &T, from: usize) -> Option<()>
where
    T: Integer + CheckedSub + CheckedMul + Clone,
{
    if q.is_zero() {
        return Some(());
    }
    for row in m.iter_mut().skip(from) {
        let prod = q.checked_mul(&row[t])?;
        row[j] = row[j].checked_sub(&prod)?;
    }
    Some(())
}
