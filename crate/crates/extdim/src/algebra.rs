//! Bound path algebras kQ/I with a computed residue-path basis and
//! multiplication table.
//!
//! Paths are stored as traversal sequences: `p = [a1, a2]` means "follow a1,
//! then a2", so `source(p) = source(a1)` and `target(p) = target(a2)`. The
//! algebra product is composition in application order,
//! `mul(x, y) = traverse y, then x`, which makes left modules into covariant
//! quiver representations and `A e_i` the projective with top S(i).

use crate::quiver::{Arrow, Quiver};
use crate::scalar::{FieldSpec, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// A residue path: trivial (a vertex) or a sequence of composable arrows in
/// traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: vec![] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Traversal concatenation: self, then other.
    pub fn then(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }
}

/// A linear combination of basis elements of a [`PathAlgebra`], sparse and
/// sorted by basis index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElt {
    pub terms: Vec<(usize, Scalar)>,
}

impl AlgElt {
    pub fn zero() -> Self {
        AlgElt { terms: vec![] }
    }

    pub fn basis(i: usize, field: &FieldSpec) -> Self {
        AlgElt { terms: vec![(i, field.one())] }
    }

    pub fn from_terms(mut terms: Vec<(usize, Scalar)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.add(&c),
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        AlgElt { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &AlgElt) -> AlgElt {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        AlgElt::from_terms(terms)
    }

    pub fn sub(&self, rhs: &AlgElt) -> AlgElt {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().map(|(i, c)| (*i, c.neg())));
        AlgElt::from_terms(terms)
    }

    pub fn scale(&self, c: &Scalar) -> AlgElt {
        if c.is_zero() {
            return AlgElt::zero();
        }
        AlgElt { terms: self.terms.iter().map(|(i, x)| (*i, x.mul(c))).collect() }
    }

    pub fn coeff(&self, i: usize) -> Option<&Scalar> {
        self.terms.iter().find(|(j, _)| *j == i).map(|(_, c)| c)
    }
}

/// Errors from algebra construction.
#[derive(Debug, Clone, thiserror::Error)]
pub enum AlgebraError {
    #[error("relation must be a combination of parallel paths of length >= 2: {0}")]
    BadRelation(String),
    #[error("arrow ideal is not nilpotent modulo the relations (closure did not stabilize within {0} lengths)")]
    NotAdmissible(usize),
    #[error("path enumeration exceeded the budget of {0} paths; relations do not appear admissible")]
    PathBudget(usize),
    #[error("{0}")]
    Invalid(String),
}

const MAX_CLOSURE_LENGTH: usize = 64;
const MAX_PATH_BUDGET: usize = 200_000;

/// A finite-dimensional bound quiver algebra with explicit basis.
#[derive(Clone)]
pub struct PathAlgebra {
    pub field: FieldSpec,
    pub quiver: Quiver,
    /// Input relations, each a combination of parallel paths (traversal order).
    pub relations: Vec<Vec<(Path, Scalar)>>,
    /// Residue-class representatives: trivial paths first (vertex order),
    /// then by (length, lex on arrow indices).
    pub basis: Vec<Path>,
    /// mult_table[i][j] = basis_i * basis_j ("traverse j, then i").
    mult_table: Vec<Vec<AlgElt>>,
    /// Least N with (arrow ideal)^N contained in the relation ideal.
    pub nilpotency: usize,
    path_index: HashMap<Path, usize>,
    /// Normal forms of single paths that are not basis elements.
    reduced: HashMap<Path, AlgElt>,
    op_cache: OnceLock<Arc<PathAlgebra>>,
}

impl fmt::Debug for PathAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PathAlgebra(dim {}, {} vertices, {} arrows, field {})",
            self.dim(),
            self.quiver.num_vertices(),
            self.quiver.arrows.len(),
            self.field
        )
    }
}

impl PathAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    /// Basis index of the trivial path at vertex v.
    pub fn idempotent(&self, v: usize) -> usize {
        v
    }

    pub fn basis_source(&self, i: usize) -> usize {
        self.basis[i].source
    }

    pub fn basis_target(&self, i: usize) -> usize {
        self.basis[i].target
    }

    /// Normal form of an arbitrary path (by traversal sequence).
    pub fn reduce_path(&self, p: &Path) -> AlgElt {
        if let Some(&i) = self.path_index.get(p) {
            return AlgElt::basis(i, &self.field);
        }
        if let Some(e) = self.reduced.get(p) {
            return e.clone();
        }
        if p.len() >= self.nilpotency {
            return AlgElt::zero();
        }
        // paths shorter than the nilpotency bound are always recorded
        AlgElt::zero()
    }

    /// Product in application order: `mul(x, y)` acts as "y first, then x" on
    /// modules; on traversal sequences it is concat(y, x).
    pub fn mul(&self, x: &AlgElt, y: &AlgElt) -> AlgElt {
        let mut terms = Vec::new();
        for (i, a) in &x.terms {
            for (j, b) in &y.terms {
                let prod = &self.mult_table[*i][*j];
                let c = a.mul(b);
                for (k, d) in &prod.terms {
                    terms.push((*k, d.mul(&c)));
                }
            }
        }
        AlgElt::from_terms(terms)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &AlgElt {
        &self.mult_table[i][j]
    }

    pub fn unit(&self) -> AlgElt {
        AlgElt {
            terms: (0..self.num_vertices()).map(|v| (v, self.field.one())).collect(),
        }
    }

    /// Is the element supported only on paths of length >= 1?
    pub fn in_radical(&self, x: &AlgElt) -> bool {
        x.terms.iter().all(|(i, _)| !self.basis[*i].is_trivial())
    }

    /// Basis indices of paths from u to v.
    pub fn paths_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == u && self.basis[i].target == v).collect()
    }

    /// Loewy length: least m with rad^m = 0.
    pub fn loewy_length(&self) -> usize {
        self.nilpotency
    }

    pub fn arrow_elt(&self, arrow_idx: usize) -> AlgElt {
        let a = &self.quiver.arrows[arrow_idx];
        let p = Path { source: a.source, target: a.target, arrows: vec![arrow_idx] };
        self.reduce_path(&p)
    }

    /// Construct from a quiver and relations; computes the basis and
    /// multiplication table by ideal closure.
    pub fn new(
        field: FieldSpec,
        quiver: Quiver,
        relations: Vec<Vec<(Path, Scalar)>>,
    ) -> Result<Arc<PathAlgebra>, AlgebraError> {
        for rel in &relations {
            if rel.is_empty() {
                return Err(AlgebraError::BadRelation("empty relation".into()));
            }
            let (s, t) = (rel[0].0.source, rel[0].0.target);
            for (p, _) in rel {
                if p.len() < 2 {
                    return Err(AlgebraError::BadRelation(format!(
                        "path of length {} (need >= 2)",
                        p.len()
                    )));
                }
                if p.source != s || p.target != t {
                    return Err(AlgebraError::BadRelation("paths not parallel".into()));
                }
                for &a in &p.arrows {
                    if a >= quiver.arrows.len() {
                        return Err(AlgebraError::Invalid("arrow index out of range".into()));
                    }
                }
                for w in p.arrows.windows(2) {
                    if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                        return Err(AlgebraError::BadRelation("non-composable path".into()));
                    }
                }
            }
        }
        closure(field, quiver, relations)
    }

    /// The opposite algebra: arrows reversed, relation paths reversed.
    /// Cached; the cache links both algebras for the process lifetime.
    pub fn opposite(self: &Arc<Self>) -> Arc<PathAlgebra> {
        self.op_cache
            .get_or_init(|| {
                let op = self.build_opposite();
                let _ = op.op_cache.set(self.clone());
                op
            })
            .clone()
    }

    fn build_opposite(&self) -> Arc<PathAlgebra> {
        let rq = self.quiver.reversed();
        let rels = self
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|(p, c)| {
                        let mut arrows = p.arrows.clone();
                        arrows.reverse();
                        (Path { source: p.target, target: p.source, arrows }, c.clone())
                    })
                    .collect()
            })
            .collect();
        PathAlgebra::new(self.field, rq, rels).expect("opposite of a valid algebra is valid")
    }

    /// Map a path of this algebra to the corresponding reversed path index in
    /// the opposite algebra.
    pub fn path_reversed(&self, p: &Path) -> Path {
        let mut arrows = p.arrows.clone();
        arrows.reverse();
        Path { source: p.target, target: p.source, arrows }
    }
}

/// Enumerate paths and span the relation ideal by length until the quotient
/// stabilizes; abort on non-admissible input.
fn closure(
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Vec<(Path, Scalar)>>,
) -> Result<Arc<PathAlgebra>, AlgebraError> {
    let nv = quiver.num_vertices();
    // group all paths by (source, target); store paths by length
    // paths_by_len[l] = all paths of length l (pruned: no prefix already zero)
    let mut paths_by_len: Vec<Vec<Path>> = vec![(0..nv).map(Path::trivial).collect()];
    let arrows_from: Vec<Vec<usize>> = {
        let mut v = vec![Vec::new(); nv];
        for (i, a) in quiver.arrows.iter().enumerate() {
            v[a.source].push(i);
        }
        v
    };

    // per (s,t) block: list of known paths and the ideal rows in RREF over
    // the path coordinates (paths sorted by (len, arrows) per block)
    #[derive(Default)]
    struct Block {
        paths: Vec<Path>,
        index: HashMap<Path, usize>,
        // RREF rows over the coordinates; pivot = largest-index nonzero
        rows: Vec<Vec<(usize, Scalar)>>,
        pivots: BTreeMap<usize, usize>, // coord -> row
    }
    impl Block {
        fn add_path(&mut self, p: Path) -> usize {
            let id = self.paths.len();
            self.index.insert(p.clone(), id);
            self.paths.push(p);
            id
        }
        /// Reduce a sparse vector by the rows; returns the reduced vector.
        fn reduce(&self, mut v: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
            loop {
                v.sort_by_key(|(i, _)| std::cmp::Reverse(*i));
                v.retain(|(_, c)| !c.is_zero());
                // combine duplicates
                let mut comb: Vec<(usize, Scalar)> = Vec::with_capacity(v.len());
                for (i, c) in v {
                    match comb.last_mut() {
                        Some((j, acc)) if *j == i => *acc = acc.add(&c),
                        _ => comb.push((i, c)),
                    }
                }
                comb.retain(|(_, c)| !c.is_zero());
                v = comb;
                let Some(&(lead, ref lc)) = v.first() else { return v };
                let Some(&row_id) = self.pivots.get(&lead) else { return v };
                let row = &self.rows[row_id];
                let factor = lc.clone();
                // v -= factor * row (row is monic at its pivot)
                let mut merged: Vec<(usize, Scalar)> = v;
                for (i, c) in row {
                    merged.push((*i, c.mul(&factor).neg()));
                }
                v = merged;
            }
        }
        /// Insert a vector into the row space; returns true if it was new.
        fn insert(&mut self, v: Vec<(usize, Scalar)>) -> bool {
            let red = self.reduce(v);
            if red.is_empty() {
                return false;
            }
            let (lead, lc) = red[0].clone();
            let inv = lc.inv();
            let monic: Vec<(usize, Scalar)> = red.iter().map(|(i, c)| (*i, c.mul(&inv))).collect();
            self.pivots.insert(lead, self.rows.len());
            self.rows.push(monic);
            true
        }
        fn is_dead(&self, p: &Path, one: &Scalar) -> bool {
            let Some(&i) = self.index.get(p) else { return false };
            self.reduce(vec![(i, one.clone())]).is_empty()
        }
    }

    let mut blocks: HashMap<(usize, usize), Block> = HashMap::new();
    let block_key = |p: &Path| (p.source, p.target);
    for p in &paths_by_len[0] {
        blocks.entry(block_key(p)).or_default().add_path(p.clone());
    }

    let mut total_paths = nv;
    let max_rel_len = relations
        .iter()
        .flat_map(|r| r.iter().map(|(p, _)| p.len()))
        .max()
        .unwrap_or(0);

    let one = field.one();
    let mut stable_since: Option<usize> = None;
    let mut nilpotency: Option<usize> = None;

    for cur_len in 1..=MAX_CLOSURE_LENGTH {
        // extend paths: new paths of length cur_len from surviving paths of
        // length cur_len - 1; a path in the ideal span is not extended since
        // every extension is in the span too
        let prev = &paths_by_len[cur_len - 1];
        let mut next = Vec::new();
        for p in prev {
            if blocks.get(&block_key(p)).unwrap().is_dead(p, &one) {
                continue;
            }
            for &ai in &arrows_from[p.target] {
                let a = &quiver.arrows[ai];
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                next.push(Path { source: p.source, target: a.target, arrows });
            }
        }
        total_paths += next.len();
        if total_paths > MAX_PATH_BUDGET {
            return Err(AlgebraError::PathBudget(MAX_PATH_BUDGET));
        }
        for p in &next {
            blocks.entry(block_key(p)).or_default().add_path(p.clone());
        }
        paths_by_len.push(next);

        // span ideal elements u * r * v whose longest term has length cur_len;
        // shorter products were inserted in earlier rounds
        for rel in &relations {
            let rel_max = rel.iter().map(|(p, _)| p.len()).max().unwrap();
            if cur_len < rel_max {
                continue;
            }
            let budget = cur_len - rel_max;
            let s = rel[0].0.source;
            let t = rel[0].0.target;
            for ll in 0..=budget {
                let rl = budget - ll;
                let lefts: Vec<Path> =
                    paths_by_len[ll].iter().filter(|u| u.target == s).cloned().collect();
                let rights: Vec<Path> =
                    paths_by_len[rl].iter().filter(|v| v.source == t).cloned().collect();
                for u in &lefts {
                    for v in &rights {
                        let bk = (u.source, v.target);
                        let blk = blocks.entry(bk).or_default();
                        let mut coords: Vec<(usize, Scalar)> = Vec::new();
                        for (p, c) in rel {
                            let urv = u.then(p).and_then(|up| up.then(v)).expect("parallel");
                            match blk.index.get(&urv) {
                                Some(&id) => coords.push((id, c.clone())),
                                // a term with a pruned prefix is already in
                                // the ideal; dropping it keeps the row an
                                // ideal element
                                None => {}
                            }
                        }
                        blk.insert(coords);
                    }
                }
            }
        }

        // all paths of length cur_len in the span means J^cur_len lies in
        // the ideal
        let all_dead = {
            let dead = |p: &Path| blocks.get(&block_key(p)).unwrap().is_dead(p, &one);
            paths_by_len[cur_len].iter().all(dead)
        };
        if all_dead {
            if nilpotency.is_none() {
                let mut m = cur_len;
                while m > 0
                    && paths_by_len[m - 1]
                        .iter()
                        .all(|p| blocks.get(&block_key(p)).unwrap().is_dead(p, &one))
                {
                    m -= 1;
                }
                nilpotency = Some(m);
            }
            match stable_since {
                // run extra rounds so late products of mixed-length
                // relations are captured before freezing the basis
                Some(since) if cur_len >= since + max_rel_len.max(1) => break,
                Some(_) => {}
                None => stable_since = Some(cur_len),
            }
        } else {
            stable_since = None;
            nilpotency = None;
        }
        if cur_len == MAX_CLOSURE_LENGTH {
            return Err(AlgebraError::NotAdmissible(MAX_CLOSURE_LENGTH));
        }
    }

    let nilpotency = nilpotency.ok_or(AlgebraError::NotAdmissible(MAX_CLOSURE_LENGTH))?;

    // basis: non-pivot paths of length < nilpotency, ordered by
    // (length, arrow sequence) with trivial paths first in vertex order
    let mut basis: Vec<Path> = Vec::new();
    for l in 0..nilpotency.max(1) {
        if l >= paths_by_len.len() {
            break;
        }
        let mut layer: Vec<Path> = Vec::new();
        for p in &paths_by_len[l] {
            let blk = blocks.get(&block_key(p)).unwrap();
            let id = blk.index[p];
            if !blk.pivots.contains_key(&id) {
                layer.push(p.clone());
            }
        }
        layer.sort();
        basis.extend(layer);
    }
    let path_index: HashMap<Path, usize> =
        basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

    // normal forms for every enumerated non-basis path (for products)
    let mut reduced: HashMap<Path, AlgElt> = HashMap::new();
    for layer in &paths_by_len {
        for p in layer {
            if path_index.contains_key(p) {
                continue;
            }
            let blk = blocks.get(&block_key(p)).unwrap();
            let id = blk.index[p];
            let red = blk.reduce(vec![(id, field.one())]);
            let elt = AlgElt::from_terms(
                red.into_iter()
                    .map(|(cid, c)| {
                        let bp = &blk.paths[cid];
                        let bi = *path_index.get(bp).unwrap_or_else(|| {
                            panic!("reduction produced non-basis path {bp:?}")
                        });
                        (bi, c)
                    })
                    .collect(),
            );
            reduced.insert(p.clone(), elt);
        }
    }

    // multiplication table: basis_i * basis_j = concat(j, i) reduced
    let dim = basis.len();
    let mut table = vec![vec![AlgElt::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let Some(p) = basis[j].then(&basis[i]) else { continue };
            let elt = if let Some(&k) = path_index.get(&p) {
                AlgElt::basis(k, &field)
            } else if p.len() >= nilpotency {
                // product longer than anything enumerated: need it reduced;
                // lengths < nilpotency are enumerated, >= nilpotency may not
                // be, but every path of length >= nilpotency is in the ideal
                AlgElt::zero()
            } else {
                reduced.get(&p).cloned().unwrap_or_else(AlgElt::zero)
            };
            table[i][j] = elt;
        }
    }

    let alg = PathAlgebra {
        field,
        quiver,
        relations,
        basis,
        mult_table: table,
        nilpotency,
        path_index,
        reduced,
        op_cache: OnceLock::new(),
    };
    debug_assert!(alg.check_consistency().is_ok());
    Ok(Arc::new(alg))
}

impl PathAlgebra {
    /// Unit and associativity sanity check on the multiplication table.
    pub fn check_consistency(&self) -> Result<(), String> {
        let one = self.unit();
        for i in 0..self.dim() {
            let b = AlgElt::basis(i, &self.field);
            if self.mul(&one, &b) != b || self.mul(&b, &one) != b {
                return Err(format!("unit fails on basis element {i}"));
            }
        }
        let n = self.dim();
        if n <= 24 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let a = AlgElt::basis(i, &self.field);
                        let b = AlgElt::basis(j, &self.field);
                        let c = AlgElt::basis(k, &self.field);
                        let l = self.mul(&self.mul(&a, &b), &c);
                        let r = self.mul(&a, &self.mul(&b, &c));
                        if l != r {
                            return Err(format!("associativity fails at ({i},{j},{k})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Canonical JSON serialization of an algebra.
#[derive(Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    /// Basis paths as arrow-label sequences (empty = trivial path, with the
    /// vertex recorded).
    pub basis: Vec<BasisPathJson>,
    /// Sparse multiplication table: (i, j, k, coeff) with basis_i * basis_j
    /// containing coeff * basis_k.
    pub mult: Vec<(usize, usize, usize, String)>,
    pub nilpotency: usize,
}

#[derive(Serialize, Deserialize)]
pub struct BasisPathJson {
    pub source: String,
    pub target: String,
    pub arrows: Vec<String>,
}

impl PathAlgebra {
    pub fn to_json(&self) -> AlgebraJson {
        let mut mult = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (k, c) in &self.mult_table[i][j].terms {
                    mult.push((i, j, *k, c.to_literal()));
                }
            }
        }
        AlgebraJson {
            mult,
            field: self.field.to_string(),
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| {
                    (
                        a.label.clone(),
                        self.quiver.vertices[a.source].clone(),
                        self.quiver.vertices[a.target].clone(),
                    )
                })
                .collect(),
            basis: self
                .basis
                .iter()
                .map(|p| BasisPathJson {
                    source: self.quiver.vertices[p.source].clone(),
                    target: self.quiver.vertices[p.target].clone(),
                    arrows: p.arrows.iter().map(|&a| self.quiver.arrows[a].label.clone()).collect(),
                })
                .collect(),
            nilpotency: self.nilpotency,
        }
    }

    /// Content hash of the canonical serialization.
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let json = serde_json::to_string(&self.to_json()).expect("serializable");
        let mut h = Sha256::new();
        h.update(json.as_bytes());
        format!("{:x}", h.finalize())
    }
}

/// Build a one-vertex algebra over a field: the field itself.
pub fn ground_field_algebra(field: FieldSpec) -> Arc<PathAlgebra> {
    let q = Quiver::new(vec!["1".into()], vec![]).unwrap();
    PathAlgebra::new(field, q, vec![]).unwrap()
}

/// k[x]/(x^n) as a one-vertex loop algebra.
pub fn truncated_polynomial_algebra(field: FieldSpec, n: usize) -> Arc<PathAlgebra> {
    assert!(n >= 2);
    let q = Quiver::new(
        vec!["1".into()],
        vec![Arrow { label: "x".into(), source: 0, target: 0 }],
    )
    .unwrap();
    let rel = vec![(Path { source: 0, target: 0, arrows: vec![0; n] }, field.one())];
    PathAlgebra::new(field, q, vec![rel]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex_algebra_is_the_field() {
        let a = ground_field_algebra(FieldSpec::Rational);
        assert_eq!(a.dim(), 1);
        assert_eq!(a.nilpotency, 1);
        assert!(a.check_consistency().is_ok());
    }

    #[test]
    fn dual_numbers() {
        let a = truncated_polynomial_algebra(FieldSpec::Rational, 2);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.nilpotency, 2);
        let x = a.arrow_elt(0);
        assert!(a.mul(&x, &x).is_zero());
    }

    #[test]
    fn truncated_cubic() {
        let a = truncated_polynomial_algebra(FieldSpec::Rational, 3);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.nilpotency, 3);
    }

    #[test]
    fn opposite_involution() {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                Arrow { label: "a".into(), source: 0, target: 1 },
                Arrow { label: "b".into(), source: 2, target: 1 },
            ],
        )
        .unwrap();
        let a = PathAlgebra::new(FieldSpec::Rational, q, vec![]).unwrap();
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        assert_eq!(op.quiver.arrows[0].source, 1);
        let opop = op.opposite();
        assert_eq!(opop.quiver, a.quiver);
        assert_eq!(opop.basis, a.basis);
    }

    #[test]
    fn non_admissible_rejected() {
        // loop with no relations: infinite-dimensional
        let q = Quiver::new(
            vec!["1".into()],
            vec![Arrow { label: "x".into(), source: 0, target: 0 }],
        )
        .unwrap();
        let r = PathAlgebra::new(FieldSpec::Rational, q, vec![]);
        assert!(matches!(r, Err(AlgebraError::NotAdmissible(_))));
    }

    #[test]
    fn relation_length_checked() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![Arrow { label: "a".into(), source: 0, target: 1 }],
        )
        .unwrap();
        let rel = vec![(Path { source: 0, target: 1, arrows: vec![0] }, FieldSpec::Rational.one())];
        let r = PathAlgebra::new(FieldSpec::Rational, q, vec![rel]);
        assert!(matches!(r, Err(AlgebraError::BadRelation(_))));
    }

    #[test]
    fn commutative_square_with_commutativity_relation() {
        // 0 -> 1 -> 3, 0 -> 2 -> 3, relation: path013 - path023
        let q = Quiver::new(
            (0..4).map(|i| i.to_string()).collect(),
            vec![
                Arrow { label: "a".into(), source: 0, target: 1 },
                Arrow { label: "b".into(), source: 1, target: 3 },
                Arrow { label: "c".into(), source: 0, target: 2 },
                Arrow { label: "d".into(), source: 2, target: 3 },
            ],
        )
        .unwrap();
        let f = FieldSpec::Rational;
        let rel = vec![
            (Path { source: 0, target: 3, arrows: vec![0, 1] }, f.one()),
            (Path { source: 0, target: 3, arrows: vec![2, 3] }, f.one().neg()),
        ];
        let a = PathAlgebra::new(f, q, vec![rel]).unwrap();
        // basis: 4 trivial + 4 arrows + 1 surviving length-2 class
        assert_eq!(a.dim(), 9);
        assert!(a.check_consistency().is_ok());
        // the two length-2 paths have the same normal form
        let p1 = a.reduce_path(&Path { source: 0, target: 3, arrows: vec![0, 1] });
        let p2 = a.reduce_path(&Path { source: 0, target: 3, arrows: vec![2, 3] });
        assert_eq!(p1, p2);
        assert!(!p1.is_zero());
    }
}
