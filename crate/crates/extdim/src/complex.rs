//! Bounded complexes of indecomposable projectives with differentials as
//! matrices of algebra elements, radical normal forms, and chain maps
//! modulo homotopy.
//!
//! A term is a list of vertices (one indecomposable projective per entry);
//! the differential entry from source slot c into target slot r is an
//! algebra element supported on paths `target_vertex -> source_vertex`,
//! acting by right multiplication. Keeping differentials at the algebra
//! level keeps the homotopy linear algebra small.

use crate::algebra::{AlgElt, PathAlgebra};
use crate::matrix::Mat;
use crate::rep::{proj_basis, ProjSum, Rep, RepMap};
use crate::scalar::Scalar;
use std::sync::Arc;

/// A matrix of algebra elements describing a map between sums of
/// indecomposable projectives.
pub type AlgMat = Vec<Vec<AlgElt>>;

/// Entry semantics: the element for "apply x, then y".
fn elt_then(alg: &PathAlgebra, x: &AlgElt, y: &AlgElt) -> AlgElt {
    alg.mul(x, y)
}

/// Compose map matrices: `first` from X to Y, `second` from Y to Z.
pub fn amat_compose(alg: &PathAlgebra, first: &AlgMat, second: &AlgMat) -> AlgMat {
    let rows = second.len();
    let mid = first.len();
    let cols = if mid > 0 { first[0].len() } else { 0 };
    let mut out = vec![vec![AlgElt::zero(); cols]; rows];
    for r in 0..rows {
        for c in 0..cols {
            let mut acc = AlgElt::zero();
            for m in 0..mid {
                if first[m][c].is_zero() || second[r][m].is_zero() {
                    continue;
                }
                acc = acc.add(&elt_then(alg, &first[m][c], &second[r][m]));
            }
            out[r][c] = acc;
        }
    }
    out
}

pub fn amat_zero(rows: usize, cols: usize) -> AlgMat {
    vec![vec![AlgElt::zero(); cols]; rows]
}

pub fn amat_is_zero(m: &AlgMat) -> bool {
    m.iter().all(|row| row.iter().all(|e| e.is_zero()))
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ComplexError {
    #[error("differential entry at degree {degree} ({row},{col}) is not supported on paths {expect}")]
    BadEntry { degree: i64, row: usize, col: usize, expect: String },
    #[error("d.d != 0 at degree {0}")]
    NotAComplex(i64),
    #[error("complex is homotopy-zero")]
    HomotopyZero,
    #[error("{0}")]
    Other(String),
}

/// A bounded complex of projective modules.
#[derive(Clone)]
pub struct ProjComplex {
    pub algebra: Arc<PathAlgebra>,
    /// Degree of terms[0].
    pub lo: i64,
    /// Per degree: the vertex of each indecomposable projective summand.
    pub terms: Vec<Vec<usize>>,
    /// diffs[k]: terms[k] -> terms[k+1]; length = terms.len().saturating_sub(1).
    pub diffs: Vec<AlgMat>,
}

impl std::fmt::Debug for ProjComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let shape: Vec<usize> = self.terms.iter().map(|t| t.len()).collect();
        write!(f, "ProjComplex(lo {}, terms {:?})", self.lo, shape)
    }
}

impl ProjComplex {
    pub fn new(
        algebra: Arc<PathAlgebra>,
        lo: i64,
        terms: Vec<Vec<usize>>,
        diffs: Vec<AlgMat>,
    ) -> Result<Self, ComplexError> {
        let c = ProjComplex { algebra, lo, terms, diffs };
        c.validate()?;
        Ok(c)
    }

    /// A module's stalk complex placed in a single degree (projective sums).
    pub fn stalk(algebra: Arc<PathAlgebra>, degree: i64, vertices: Vec<usize>) -> Self {
        ProjComplex { algebra, lo: degree, terms: vec![vertices], diffs: vec![] }
    }

    /// The regular module as a stalk in degree 0.
    pub fn regular_stalk(algebra: &Arc<PathAlgebra>) -> Self {
        let n = algebra.quiver.num_vertices();
        ProjComplex::stalk(algebra.clone(), 0, (0..n).collect())
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::Range<i64> {
        self.lo..self.lo + self.terms.len() as i64
    }

    pub fn term(&self, degree: i64) -> &[usize] {
        let idx = degree - self.lo;
        if idx < 0 || idx as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[idx as usize]
        }
    }

    pub fn diff(&self, degree: i64) -> Option<&AlgMat> {
        let idx = degree - self.lo;
        if idx < 0 || idx as usize >= self.diffs.len() {
            None
        } else {
            Some(&self.diffs[idx as usize])
        }
    }

    pub fn is_zero_object(&self) -> bool {
        self.terms.iter().all(|t| t.is_empty())
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    pub fn validate(&self) -> Result<(), ComplexError> {
        if self.terms.len() >= 2 && self.diffs.len() + 1 != self.terms.len() {
            return Err(ComplexError::Other("differential count mismatch".into()));
        }
        for (k, d) in self.diffs.iter().enumerate() {
            let src = &self.terms[k];
            let tgt = &self.terms[k + 1];
            if d.len() != tgt.len() || d.iter().any(|row| row.len() != src.len()) {
                return Err(ComplexError::Other(format!(
                    "differential {k} has the wrong shape"
                )));
            }
            for (r, row) in d.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    for (bi, _) in &e.terms {
                        let p = &self.algebra.basis[*bi];
                        if p.source != tgt[r] || p.target != src[c] {
                            return Err(ComplexError::BadEntry {
                                degree: self.lo + k as i64,
                                row: r,
                                col: c,
                                expect: format!("{} -> {}", tgt[r], src[c]),
                            });
                        }
                    }
                }
            }
        }
        for k in 0..self.diffs.len().saturating_sub(1) {
            let dd = amat_compose(&self.algebra, &self.diffs[k], &self.diffs[k + 1]);
            if !amat_is_zero(&dd) {
                return Err(ComplexError::NotAComplex(self.lo + k as i64));
            }
        }
        Ok(())
    }

    /// Is every differential entry in the radical?
    pub fn is_radical(&self) -> bool {
        self.diffs.iter().all(|d| {
            d.iter().all(|row| row.iter().all(|e| self.algebra.in_radical(e)))
        })
    }

    /// Drop empty terms at both ends.
    pub fn trim(&self) -> ProjComplex {
        let mut lo_idx = 0;
        while lo_idx < self.terms.len() && self.terms[lo_idx].is_empty() {
            lo_idx += 1;
        }
        if lo_idx == self.terms.len() {
            return ProjComplex {
                algebra: self.algebra.clone(),
                lo: 0,
                terms: vec![vec![]],
                diffs: vec![],
            };
        }
        let mut hi_idx = self.terms.len() - 1;
        while self.terms[hi_idx].is_empty() {
            hi_idx -= 1;
        }
        ProjComplex {
            algebra: self.algebra.clone(),
            lo: self.lo + lo_idx as i64,
            terms: self.terms[lo_idx..=hi_idx].to_vec(),
            diffs: if hi_idx > lo_idx { self.diffs[lo_idx..hi_idx].to_vec() } else { vec![] },
        }
    }

    /// Shift left by k: X[k]^n = X^{n+k}, differentials scaled by (-1)^k.
    pub fn shift(&self, k: i64) -> ProjComplex {
        let f = self.algebra.field;
        let sign = if k.rem_euclid(2) == 0 { f.one() } else { f.one().neg() };
        ProjComplex {
            algebra: self.algebra.clone(),
            lo: self.lo - k,
            terms: self.terms.clone(),
            diffs: self
                .diffs
                .iter()
                .map(|d| d.iter().map(|row| row.iter().map(|e| e.scale(&sign)).collect()).collect())
                .collect(),
        }
    }

    /// Direct sum, aligned by absolute degree.
    pub fn direct_sum(&self, other: &ProjComplex) -> ProjComplex {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let mut terms = Vec::new();
        let mut splits = Vec::new();
        for d in lo..=hi {
            let a = self.term(d).to_vec();
            let b = other.term(d).to_vec();
            splits.push(a.len());
            let mut t = a;
            t.extend(b);
            terms.push(t);
        }
        let mut diffs = Vec::new();
        for d in lo..hi {
            let k = (d - lo) as usize;
            let src_a = self.term(d).len();
            let src_b = other.term(d).len();
            let tgt_a = self.term(d + 1).len();
            let tgt_b = other.term(d + 1).len();
            let da = self.diff(d);
            let db = other.diff(d);
            let mut m = amat_zero(tgt_a + tgt_b, src_a + src_b);
            if let Some(da) = da {
                for r in 0..tgt_a {
                    for c in 0..src_a {
                        m[r][c] = da[r][c].clone();
                    }
                }
            }
            if let Some(db) = db {
                for r in 0..tgt_b {
                    for c in 0..src_b {
                        m[tgt_a + r][src_a + c] = db[r][c].clone();
                    }
                }
            }
            diffs.push(m);
        }
        let _ = splits;
        ProjComplex { algebra: self.algebra.clone(), lo, terms, diffs }
    }

    /// Realize the degree-d term as an actual representation.
    pub fn realize_term(&self, degree: i64) -> ProjSum {
        ProjSum::new(&self.algebra, self.term(degree).to_vec())
    }

    /// Realize a differential as a representation map.
    pub fn realize_diff(&self, degree: i64) -> Option<RepMap> {
        let d = self.diff(degree)?;
        let src = self.realize_term(degree);
        let tgt = self.realize_term(degree + 1);
        Some(alg_mat_to_repmap(&self.algebra, &src, &tgt, d))
    }

    /// Radical normal form by Gaussian cancellation of invertible entries.
    pub fn radical_normal_form(&self) -> ProjComplex {
        let mut c = self.clone();
        'outer: loop {
            for k in 0..c.diffs.len() {
                let d = &c.diffs[k];
                for (r, row) in d.iter().enumerate() {
                    for (cc, e) in row.iter().enumerate() {
                        if c.terms[k][cc] != c.terms[k + 1][r] {
                            continue;
                        }
                        let v = c.terms[k][cc];
                        let unit_coeff = e.coeff(c.algebra.idempotent(v)).cloned();
                        if let Some(u) = unit_coeff {
                            if !u.is_zero() {
                                c = c.cancel_at(k, r, cc);
                                continue 'outer;
                            }
                        }
                    }
                }
            }
            break;
        }
        c.trim()
    }

    /// Cancel the invertible entry at differential k, target row r, source
    /// column cc: removes one projective from each side and applies the
    /// Schur complement.
    fn cancel_at(&self, k: usize, r: usize, cc: usize) -> ProjComplex {
        let alg = &self.algebra;
        let d = &self.diffs[k];
        let u = &d[r][cc];
        let v = self.terms[k][cc];
        let uinv = invert_corner(alg, u, v);
        let mut terms = self.terms.clone();
        let src_keep: Vec<usize> = (0..terms[k].len()).filter(|&i| i != cc).collect();
        let tgt_keep: Vec<usize> = (0..terms[k + 1].len()).filter(|&i| i != r).collect();
        terms[k] = src_keep.iter().map(|&i| self.terms[k][i]).collect();
        terms[k + 1] = tgt_keep.iter().map(|&i| self.terms[k + 1][i]).collect();
        let mut diffs = self.diffs.clone();
        // Schur update on d^k: D' = D - (B then u^{-1} then C)
        let mut nd = amat_zero(tgt_keep.len(), src_keep.len());
        for (ri, &orig_r) in tgt_keep.iter().enumerate() {
            for (ci, &orig_c) in src_keep.iter().enumerate() {
                let b = &d[r][orig_c]; // P(v_c') -> P(w_r-cancelled)
                let cpart = &d[orig_r][cc]; // P(v_cc) -> P(w_r')
                let correction = elt_then(alg, &elt_then(alg, b, &uinv), cpart);
                nd[ri][ci] = d[orig_r][orig_c].sub(&correction);
            }
        }
        diffs[k] = nd;
        // previous differential loses row cc (rows indexed by terms[k])
        if k > 0 {
            let prev = &self.diffs[k - 1];
            diffs[k - 1] = src_keep
                .iter()
                .map(|&i| prev[i].clone())
                .collect();
        }
        // next differential loses column r
        if k + 1 < self.diffs.len() {
            let next = &self.diffs[k + 1];
            diffs[k + 1] = next
                .iter()
                .map(|row| tgt_keep.iter().map(|&i| row[i].clone()).collect())
                .collect();
        }
        ProjComplex { algebra: self.algebra.clone(), lo: self.lo, terms, diffs }
    }

    /// Length of the radical normal form.
    pub fn length(&self) -> Result<usize, ComplexError> {
        let n = self.radical_normal_form();
        if n.is_zero_object() {
            return Err(ComplexError::HomotopyZero);
        }
        Ok(n.terms.len())
    }
}

/// Invert a unit of the local corner e_v A e_v by a geometric series.
fn invert_corner(alg: &PathAlgebra, u: &AlgElt, v: usize) -> AlgElt {
    let f = alg.field;
    let e = AlgElt::basis(alg.idempotent(v), &f);
    let c = u.coeff(alg.idempotent(v)).expect("unit entry").clone();
    let cinv = c.inv();
    // u = c(e + n), n nilpotent: u^{-1} = c^{-1} (e - n + n^2 - ...)
    let n = u.scale(&cinv).sub(&e);
    let mut acc = e.clone();
    let mut pow = e.clone();
    for _ in 0..alg.nilpotency {
        pow = alg.mul(&pow, &n).scale(&f.one().neg());
        if pow.is_zero() {
            break;
        }
        acc = acc.add(&pow);
    }
    let inv = acc.scale(&cinv);
    debug_assert_eq!(alg.mul(u, &inv), e);
    inv
}

/// Build the representation map described by an algebra-element matrix.
pub fn alg_mat_to_repmap(
    alg: &Arc<PathAlgebra>,
    src: &ProjSum,
    tgt: &ProjSum,
    amat: &AlgMat,
) -> RepMap {
    let f = alg.field;
    let mut gens: Vec<Vec<Scalar>> = Vec::with_capacity(src.summands.len());
    for (c, &v) in src.summands.iter().enumerate() {
        // generator of P(v) maps to the column of elements in the target
        let mut g = vec![f.zero(); tgt.rep.dims[v]];
        for (r, &w) in tgt.summands.iter().enumerate() {
            let e = &amat[r][c];
            let pbw = proj_basis(alg, w);
            for (bi, coeff) in &e.terms {
                let slot = pbw[v].iter().position(|&x| x == *bi).expect("element lives in P(w)_v");
                let col = tgt.block_cols(r, v).start + slot;
                g[col] = g[col].add(coeff);
            }
        }
        gens.push(g);
    }
    src.map_from(&tgt.rep, &gens)
}

/// A chain map between complexes over the same algebra, stored per absolute
/// degree of the source.
#[derive(Clone)]
pub struct ChainMap {
    pub mats: Vec<AlgMat>,
    pub src_lo: i64,
}

impl ChainMap {
    fn zero_between(x: &ProjComplex, y: &ProjComplex) -> ChainMap {
        let mats = x
            .degrees()
            .map(|d| amat_zero(y.term(d).len(), x.term(d).len()))
            .collect();
        ChainMap { mats, src_lo: x.lo }
    }

    pub fn component(&self, degree: i64) -> Option<&AlgMat> {
        let idx = degree - self.src_lo;
        if idx < 0 || idx as usize >= self.mats.len() {
            None
        } else {
            Some(&self.mats[idx as usize])
        }
    }
}

/// Flatten chain-map coordinates: per (degree, target slot, source slot,
/// algebra basis path from target vertex to source vertex).
struct HomCoords {
    /// (degree index, r, c, basis path index)
    slots: Vec<(usize, usize, usize, usize)>,
}

fn hom_coords_layout(alg: &PathAlgebra, x: &ProjComplex, y: &ProjComplex) -> HomCoords {
    let mut slots = Vec::new();
    for (di, d) in x.degrees().enumerate() {
        let src = x.term(d);
        let tgt = y.term(d);
        for (r, &w) in tgt.iter().enumerate() {
            for (c, &v) in src.iter().enumerate() {
                for k in alg.paths_between(w, v) {
                    slots.push((di, r, c, k));
                }
            }
        }
    }
    HomCoords { slots }
}

fn chain_map_from_coords(
    alg: &PathAlgebra,
    x: &ProjComplex,
    y: &ProjComplex,
    layout: &HomCoords,
    coords: &[Scalar],
) -> ChainMap {
    let mut cm = ChainMap::zero_between(x, y);
    for ((di, r, c, k), val) in layout.slots.iter().zip(coords.iter()) {
        if !val.is_zero() {
            let e = AlgElt::basis(*k, &alg.field).scale(val);
            cm.mats[*di][*r][*c] = cm.mats[*di][*r][*c].add(&e);
        }
    }
    cm
}

fn chain_map_to_coords(
    _alg: &PathAlgebra,
    layout: &HomCoords,
    cm: &ChainMap,
    field: crate::scalar::FieldSpec,
) -> Vec<Scalar> {
    layout
        .slots
        .iter()
        .map(|(di, r, c, k)| {
            cm.mats[*di][*r][*c]
                .coeff(*k)
                .cloned()
                .unwrap_or_else(|| field.zero())
        })
        .collect()
}

/// The violation of the chain-map condition, flattened per degree.
fn chain_violation(alg: &PathAlgebra, x: &ProjComplex, y: &ProjComplex, cm: &ChainMap) -> Vec<Scalar> {
    let f = alg.field;
    let mut out = Vec::new();
    for d in x.degrees() {
        // phi^d then d_Y^d - d_X^d then phi^{d+1} : X^d -> Y^{d+1}
        let tgt = y.term(d + 1);
        let src = x.term(d);
        let mut lhs = amat_zero(tgt.len(), src.len());
        if let (Some(phi), Some(dy)) = (cm.component(d), y.diff(d)) {
            lhs = amat_compose(alg, phi, dy);
        }
        let mut rhs = amat_zero(tgt.len(), src.len());
        if let (Some(dx), Some(phi1)) = (x.diff(d), cm.component(d + 1)) {
            rhs = amat_compose(alg, dx, phi1);
        }
        for r in 0..tgt.len() {
            for c in 0..src.len() {
                let diff = lhs[r][c].sub(&rhs[r][c]);
                // flatten over the relevant path space
                for k in alg.paths_between(tgt[r], src[c]) {
                    out.push(diff.coeff(k).cloned().unwrap_or_else(|| f.zero()));
                }
            }
        }
    }
    out
}

/// Strict chain maps and the null-homotopic subspace between two complexes.
pub struct ChainMapSpace {
    pub layout_dim: usize,
    /// Coordinate columns of a basis of chain maps.
    pub chain_basis: Vec<Vec<Scalar>>,
    /// Coordinate columns spanning null-homotopic maps.
    pub null_span: Vec<Vec<Scalar>>,
    layout: HomCoords,
}

pub fn chain_map_space(x: &ProjComplex, y: &ProjComplex) -> ChainMapSpace {
    let alg = &*x.algebra;
    let f = alg.field;
    let layout = hom_coords_layout(alg, x, y);
    let n = layout.slots.len();
    // constraint matrix columns: violation of each unit coordinate
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut coords = vec![f.zero(); n];
        coords[i] = f.one();
        let cm = chain_map_from_coords(alg, x, y, &layout, &coords);
        cols.push(chain_violation(alg, x, y, &cm));
    }
    let rows = cols.first().map_or(0, |c| c.len());
    let sys = Mat::from_fn(f, rows, n, |i, j| cols[j][i].clone());
    let ker = sys.kernel();
    let chain_basis: Vec<Vec<Scalar>> = (0..ker.cols).map(|c| ker.col(c)).collect();
    // null maps: h ranges over degreewise maps X^d -> Y^{d-1}
    let mut null_span: Vec<Vec<Scalar>> = Vec::new();
    for d in x.degrees() {
        let src = x.term(d);
        let tgt = y.term(d - 1);
        for (r, &w) in tgt.iter().enumerate() {
            for (c, &v) in src.iter().enumerate() {
                for k in alg.paths_between(w, v) {
                    // unit homotopy component h^d[r][c] = basis path k
                    let mut cm = ChainMap::zero_between(x, y);
                    let e = AlgElt::basis(k, &f);
                    // contribution (h then d_Y^{d-1}) at degree d
                    if let Some(dy) = y.diff(d - 1) {
                        let mut h = amat_zero(tgt.len(), src.len());
                        h[r][c] = e.clone();
                        let contrib = amat_compose(alg, &h, dy);
                        let di = (d - cm.src_lo) as usize;
                        add_amat(&mut cm.mats[di], &contrib);
                    }
                    // contribution (d_X^{d-1} then h) at degree d-1
                    if d - 1 >= x.lo {
                        if let Some(dx) = x.diff(d - 1) {
                            let mut h = amat_zero(tgt.len(), src.len());
                            h[r][c] = e.clone();
                            let contrib = amat_compose(alg, dx, &h);
                            let di = (d - 1 - cm.src_lo) as usize;
                            add_amat(&mut cm.mats[di], &contrib);
                        }
                    }
                    let coords = chain_map_to_coords(alg, &layout, &cm, f);
                    if coords.iter().any(|c| !c.is_zero()) {
                        null_span.push(coords);
                    }
                }
            }
        }
    }
    ChainMapSpace { layout_dim: n, chain_basis, null_span, layout }
}

fn add_amat(into: &mut AlgMat, from: &AlgMat) {
    for (r, row) in from.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            into[r][c] = into[r][c].add(e);
        }
    }
}

impl ChainMapSpace {
    /// Dimension of Hom in the homotopy category.
    pub fn hom_dim(&self, field: crate::scalar::FieldSpec) -> usize {
        let chain_rank = rank_of(&self.chain_basis, self.layout_dim, field);
        let null_rank = rank_of(&self.null_span, self.layout_dim, field);
        chain_rank - null_rank
    }

    /// Representatives of a basis of Hom modulo homotopy, as coordinates.
    pub fn class_reps(&self, field: crate::scalar::FieldSpec) -> Vec<Vec<Scalar>> {
        let mut span = if self.null_span.is_empty() {
            Mat::zero(field, self.layout_dim, 0)
        } else {
            Mat::from_fn(field, self.layout_dim, self.null_span.len(), |i, j| {
                self.null_span[j][i].clone()
            })
            .image()
        };
        let mut reps = Vec::new();
        for b in &self.chain_basis {
            if !crate::matrix::subspace::contains(&span, b) {
                let bm = Mat::from_fn(field, self.layout_dim, 1, |i, _| b[i].clone());
                span = span.hcat(&bm);
                reps.push(b.clone());
            }
        }
        reps
    }

    /// Coordinates of a chain map modulo the null span, in class-rep basis.
    pub fn class_coords(
        &self,
        field: crate::scalar::FieldSpec,
        reps: &[Vec<Scalar>],
        coords: &[Scalar],
    ) -> Option<Vec<Scalar>> {
        let k = reps.len();
        let nn = self.null_span.len();
        let sys = Mat::from_fn(field, self.layout_dim, k + nn, |i, j| {
            if j < k {
                reps[j][i].clone()
            } else {
                self.null_span[j - k][i].clone()
            }
        });
        let sol = sys.solve(coords)?;
        Some(sol[..k].to_vec())
    }

    pub fn materialize(
        &self,
        x: &ProjComplex,
        y: &ProjComplex,
        coords: &[Scalar],
    ) -> ChainMap {
        chain_map_from_coords(&x.algebra, x, y, &self.layout, coords)
    }

    pub fn coords_of(&self, x: &ProjComplex, cm: &ChainMap) -> Vec<Scalar> {
        chain_map_to_coords(&x.algebra, &self.layout, cm, x.algebra.field)
    }
}

fn rank_of(cols: &[Vec<Scalar>], dim: usize, field: crate::scalar::FieldSpec) -> usize {
    if cols.is_empty() {
        return 0;
    }
    Mat::from_fn(field, dim, cols.len(), |i, j| cols[j][i].clone()).rank()
}

/// dim Hom_{K}(X, Y[k]).
pub fn hom_homotopy_dim(x: &ProjComplex, y: &ProjComplex, k: i64) -> usize {
    let z = y.shift(k);
    let space = chain_map_space(x, &z);
    space.hom_dim(x.algebra.field)
}

/// Identity chain map.
pub fn identity_chain_map(x: &ProjComplex) -> ChainMap {
    let f = x.algebra.field;
    let mut cm = ChainMap::zero_between(x, x);
    for (di, d) in x.degrees().enumerate() {
        let t = x.term(d);
        for (i, &v) in t.iter().enumerate() {
            cm.mats[di][i][i] = AlgElt::basis(x.algebra.idempotent(v), &f);
        }
    }
    cm
}

/// Compose chain maps f: X -> Y then g: Y -> Z (all same algebra; absolute
/// degrees aligned to X).
pub fn compose_chain_maps(
    alg: &PathAlgebra,
    x: &ProjComplex,
    y: &ProjComplex,
    z: &ProjComplex,
    f: &ChainMap,
    g: &ChainMap,
) -> ChainMap {
    let mut out = ChainMap::zero_between(x, z);
    for (di, d) in x.degrees().enumerate() {
        let phi = f.component(d);
        let psi = g.component(d);
        if let (Some(phi), Some(psi)) = (phi, psi) {
            if !y.term(d).is_empty() {
                out.mats[di] = amat_compose(alg, phi, psi);
            }
        }
    }
    out
}

/// Mapping cone of a chain map f: X -> Y:
/// cone^n = X^{n+1} (+) Y^n with d = [[-d_X, 0], [f, d_Y]].
pub fn cone(x: &ProjComplex, y: &ProjComplex, f: &ChainMap) -> ProjComplex {
    let alg = x.algebra.clone();
    let fld = alg.field;
    let lo = (x.lo - 1).min(y.lo);
    let hi = (x.hi() - 1).max(y.hi());
    let mut terms = Vec::new();
    for d in lo..=hi {
        let mut t = x.term(d + 1).to_vec();
        t.extend(y.term(d).iter().copied());
        terms.push(t);
    }
    let mut diffs = Vec::new();
    for d in lo..hi {
        let xs = x.term(d + 1).len();
        let ys = y.term(d).len();
        let xt = x.term(d + 2).len();
        let yt = y.term(d + 1).len();
        let mut m = amat_zero(xt + yt, xs + ys);
        if let Some(dx) = x.diff(d + 1) {
            for r in 0..xt {
                for c in 0..xs {
                    m[r][c] = dx[r][c].scale(&fld.one().neg());
                }
            }
        }
        if let Some(fc) = f.component(d + 1) {
            for r in 0..yt {
                for c in 0..xs {
                    m[xt + r][c] = fc[r][c].clone();
                }
            }
        }
        if let Some(dy) = y.diff(d) {
            for r in 0..yt {
                for c in 0..ys {
                    m[xt + r][xs + c] = dy[r][c].clone();
                }
            }
        }
        diffs.push(m);
    }
    let out = ProjComplex { algebra: alg, lo, terms, diffs };
    debug_assert!(out.validate().is_ok());
    out.trim()
}

/// dim Hom_{D}(X, M[j]) for a module M: chain maps into the stalk, that is
/// maps X^{-j} -> M killed by the incoming differential, modulo maps
/// factoring through the outgoing one. Returns cocycle witnesses.
pub fn hom_to_module(x: &ProjComplex, m: &Rep, j: i64) -> (usize, Vec<RepMap>) {
    let deg = -j;
    let t = x.realize_term(deg);
    if t.rep.is_zero() {
        return (0, vec![]);
    }
    let h = crate::rep::hom_space(&t.rep, m);
    if h.is_empty() {
        return (0, vec![]);
    }
    let f = x.algebra.field;
    let cocycles: Vec<RepMap> = if let Some(dprev) = x.realize_diff(deg - 1) {
        let hp = crate::rep::hom_space(&dprev.source, m);
        if hp.is_empty() {
            h.clone()
        } else {
            let cols: Vec<Vec<Scalar>> = h
                .iter()
                .map(|phi| {
                    let comp = dprev.then(phi);
                    crate::rep::hom_coords(&hp, &comp).expect("composite lies in hom space")
                })
                .collect();
            let sys = Mat::from_fn(f, hp.len(), h.len(), |i, jj| cols[jj][i].clone());
            let ker = sys.kernel();
            (0..ker.cols)
                .map(|c| {
                    let coords = ker.col(c);
                    let mut w = RepMap::zero(&t.rep, m);
                    for (cc, b) in coords.iter().zip(h.iter()) {
                        w = w.add(&b.scale(cc));
                    }
                    w
                })
                .collect()
        }
    } else {
        h.clone()
    };
    let bound = boundary_rank(x, m, deg, &h);
    (cocycles.len() - bound, cocycles)
}

/// Rank of the boundary space im(Hom(X^{deg+1}, M) -> Hom(X^{deg}, M)).
fn boundary_rank(x: &ProjComplex, m: &Rep, deg: i64, h: &[RepMap]) -> usize {
    let Some(dnext) = x.realize_diff(deg) else { return 0 };
    let next = dnext.target.clone();
    let hn = crate::rep::hom_space(&next, m);
    if hn.is_empty() || h.is_empty() {
        return 0;
    }
    let f = x.algebra.field;
    let cols: Vec<Vec<Scalar>> = hn
        .iter()
        .map(|psi| {
            let comp = dnext.then(psi);
            crate::rep::hom_coords(h, &comp).expect("boundary lies in hom space")
        })
        .collect();
    Mat::from_fn(f, h.len(), hn.len(), |i, j| cols[j][i].clone()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_algebra;
    use crate::rep::simple;

    fn a3_sink() -> Arc<PathAlgebra> {
        parse_algebra("field Q\nvertex 1 2 3\narrow al : 1 -> 2\narrow be : 3 -> 2\n").unwrap()
    }

    /// [P(2) -> P(1)] in degrees -1, 0 with differential the arrow al.
    fn p_complex(a: &Arc<PathAlgebra>) -> ProjComplex {
        let al = a.arrow_elt(0);
        ProjComplex::new(a.clone(), -1, vec![vec![1], vec![0]], vec![vec![vec![al]]]).unwrap()
    }

    #[test]
    fn stalk_length_one() {
        let a = a3_sink();
        let s = ProjComplex::stalk(a.clone(), 0, vec![0]);
        assert_eq!(s.length().unwrap(), 1);
        assert!(s.is_radical());
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let a = a3_sink();
        let x = p_complex(&a);
        let id = identity_chain_map(&x);
        let c = cone(&x, &x, &id);
        let n = c.radical_normal_form();
        assert!(n.is_zero_object());
        assert!(c.length().is_err());
    }

    #[test]
    fn rnf_removes_contractible_summands() {
        let a = a3_sink();
        let x = p_complex(&a);
        let stalk = ProjComplex::stalk(a.clone(), 0, vec![2]);
        let contractible = {
            let s = ProjComplex::stalk(a.clone(), 0, vec![1]);
            let id = identity_chain_map(&s);
            cone(&s, &s, &id)
        };
        let sum = x.direct_sum(&stalk).direct_sum(&contractible);
        let n = sum.radical_normal_form();
        assert_eq!(n.total_rank(), 3);
        assert_eq!(n.length().unwrap(), 2);
        // idempotence
        let n2 = n.radical_normal_form();
        assert_eq!(n2.total_rank(), 3);
    }

    #[test]
    fn shift_round_trip() {
        let a = a3_sink();
        let x = p_complex(&a);
        let y = x.shift(3).shift(-3);
        assert_eq!(y.lo, x.lo);
        assert_eq!(y.terms, x.terms);
        for (d1, d2) in y.diffs.iter().zip(x.diffs.iter()) {
            for (r1, r2) in d1.iter().zip(d2.iter()) {
                assert_eq!(r1, r2);
            }
        }
    }

    #[test]
    fn cone_of_zero_map_is_sum_with_shift() {
        let a = a3_sink();
        let x = ProjComplex::stalk(a.clone(), 0, vec![0]);
        let y = ProjComplex::stalk(a.clone(), 0, vec![2]);
        let z = ChainMap::zero_between(&x, &y);
        let c = cone(&x, &y, &z);
        // X[1] (+) Y: one term in degree -1, one in degree 0
        assert_eq!(c.lo, -1);
        assert_eq!(c.term(-1), &[0]);
        assert_eq!(c.term(0), &[2]);
    }

    #[test]
    fn end_of_stalk_has_algebra_dimension() {
        let a = a3_sink();
        let reg = ProjComplex::regular_stalk(&a);
        assert_eq!(hom_homotopy_dim(&reg, &reg, 0), a.dim());
        assert_eq!(hom_homotopy_dim(&reg, &reg, 1), 0);
        assert_eq!(hom_homotopy_dim(&reg, &reg, -1), 0);
    }

    #[test]
    fn identity_class_is_nonzero_for_radical_complexes() {
        let a = a3_sink();
        let x = p_complex(&a);
        assert!(x.is_radical());
        let space = chain_map_space(&x, &x);
        let id = identity_chain_map(&x);
        let id_coords = space.coords_of(&x, &id);
        let reps = space.class_reps(a.field);
        let cls = space.class_coords(a.field, &reps, &id_coords).unwrap();
        assert!(cls.iter().any(|c| !c.is_zero()));
    }

    #[test]
    fn two_term_hom_vanishing_against_modules() {
        let a = a3_sink();
        let x = p_complex(&a);
        for i in 0..3 {
            let s = simple(&a, i);
            for j in [-3i64, -2, 2, 3] {
                assert_eq!(hom_to_module(&x, &s, j).0, 0, "shift {j} simple {i}");
            }
        }
        // Hom(X, S(1)) detects the cokernel H^0 = P(1)/P(2)-image = S(1)
        assert_eq!(hom_to_module(&x, &simple(&a, 0), 0).0, 1);
        // Hom(X, S(2)[1]): surjectivity of Hom(P(1),S2) -> Hom(P(2),S2) fails
        assert_eq!(hom_to_module(&x, &simple(&a, 1), 1).0, 1);
        assert_eq!(hom_to_module(&x, &simple(&a, 1), 0).0, 0);
    }

    #[test]
    fn hom_dim_matches_module_level_for_stalks() {
        let a = a3_sink();
        for i in 0..3 {
            for j in 0..3 {
                let x = ProjComplex::stalk(a.clone(), 0, vec![i]);
                let pj = crate::rep::projective(&a, j);
                let module_dim = crate::rep::hom_dim(&crate::rep::projective(&a, i), &pj);
                assert_eq!(hom_to_module(&x, &pj, 0).0, module_dim);
            }
        }
    }
}
