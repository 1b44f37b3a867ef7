//! Quivers (directed multigraphs with labels) and the ADE classification of
//! their underlying graphs.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, String> {
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(format!("duplicate vertex label `{v}`"));
            }
        }
        let mut aseen = std::collections::HashSet::new();
        for a in &arrows {
            if !aseen.insert(a.label.clone()) {
                return Err(format!("duplicate arrow label `{}`", a.label));
            }
            if seen.contains(&a.label) {
                return Err(format!("arrow label `{}` clashes with a vertex", a.label));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(format!("arrow `{}` has an undeclared endpoint", a.label));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// All arrows reversed, labels kept.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Undirected adjacency count between vertex pairs; loops counted once.
    fn edge_multiset(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for a in &self.arrows {
            let key = (a.source.min(a.target), a.source.max(a.target));
            *m.entry(key).or_insert(0) += 1;
        }
        m
    }
}

/// ADE / affine / wild classification of the underlying undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphClass {
    Dynkin { family: char, rank: usize },
    Euclidean { family: char, rank: usize },
    Wild,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Dynkin { family, rank } => write!(f, "Dynkin {family}{rank}"),
            GraphClass::Euclidean { family, rank } => write!(f, "Euclidean {family}~{rank}"),
            GraphClass::Wild => write!(f, "wild"),
        }
    }
}

impl GraphClass {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, GraphClass::Dynkin { .. })
    }
}

/// Classify a connected quiver's underlying graph by the definiteness of its
/// Tits form q(x) = sum x_i^2 - sum_{edges ij} x_i x_j (loops contribute
/// -x_i^2). Positive definite = Dynkin, positive semidefinite = Euclidean,
/// otherwise wild. The family letter comes from the tree shape.
pub fn classify_graph(q: &Quiver) -> GraphClass {
    let n = q.num_vertices();
    if n == 0 {
        return GraphClass::Dynkin { family: 'A', rank: 0 };
    }
    let edges = q.edge_multiset();
    // symmetrized Cartan-like matrix: 2 on diagonal (minus 2 per loop),
    // -multiplicity off diagonal; q positive (semi)definite iff this
    // integer symmetric matrix is.
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
    }
    for (&(a, b), &m) in &edges {
        if a == b {
            c[a][a] -= 2 * m as i64;
        } else {
            c[a][b] -= m as i64;
            c[b][a] -= m as i64;
        }
    }
    let def = integer_definiteness(&c);
    match def {
        Definiteness::PositiveDefinite => {
            let (family, rank) = dynkin_shape(q, &edges).unwrap_or(('A', n));
            GraphClass::Dynkin { family, rank }
        }
        Definiteness::PositiveSemidefinite => {
            let (family, rank) = euclidean_shape(q, &edges).unwrap_or(('A', n.saturating_sub(1)));
            GraphClass::Euclidean { family, rank }
        }
        Definiteness::Indefinite => GraphClass::Wild,
    }
}

enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

/// Exact definiteness of a symmetric integer matrix via rational LDL^T.
fn integer_definiteness(c: &[Vec<i64>]) -> Definiteness {
    use crate::scalar::FieldSpec;
    let n = c.len();
    let f = FieldSpec::Rational;
    let mut a: Vec<Vec<crate::scalar::Scalar>> =
        c.iter().map(|row| row.iter().map(|&x| f.from_i64(x)).collect()).collect();
    let mut semidefinite = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            // need the whole remaining row/col to vanish for PSD
            for j in k..n {
                if !a[k][j].is_zero() || !a[j][k].is_zero() {
                    return Definiteness::Indefinite;
                }
            }
            semidefinite = true;
            continue;
        }
        // negative pivot: indefinite (works since we only continue past
        // zero pivots whose row/col vanish)
        let pivot = a[k][k].clone();
        if matches!(&pivot, crate::scalar::Scalar::Rat(r) if r < &num_rational::BigRational::from_integer(0.into())) {
            return Definiteness::Indefinite;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].div(&pivot);
            for j in k..n {
                let t = a[k][j].mul(&factor);
                a[i][j] = a[i][j].sub(&t);
            }
        }
        for j in k + 1..n {
            a[k][j] = f.zero();
        }
    }
    if semidefinite {
        Definiteness::PositiveSemidefinite
    } else {
        Definiteness::PositiveDefinite
    }
}

fn degrees(n: usize, edges: &BTreeMap<(usize, usize), usize>) -> Vec<usize> {
    let mut deg = vec![0usize; n];
    for (&(a, b), &m) in edges {
        if a == b {
            deg[a] += 2 * m;
        } else {
            deg[a] += m;
            deg[b] += m;
        }
    }
    deg
}

/// Arm lengths (in edges) from a branch vertex of a tree.
fn arm_lengths(n: usize, edges: &BTreeMap<(usize, usize), usize>, center: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for (&(a, b), &m) in edges {
        if a != b && m == 1 {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut arms = Vec::new();
    for &start in &adj[center] {
        let mut len = 1;
        let mut prev = center;
        let mut cur = start;
        loop {
            let next: Vec<usize> = adj[cur].iter().copied().filter(|&x| x != prev).collect();
            if next.len() != 1 {
                break;
            }
            prev = cur;
            cur = next[0];
            len += 1;
        }
        arms.push(len);
    }
    arms.sort_unstable();
    arms
}

fn dynkin_shape(q: &Quiver, edges: &BTreeMap<(usize, usize), usize>) -> Option<(char, usize)> {
    let n = q.num_vertices();
    let deg = degrees(n, edges);
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    if max_deg <= 2 && !has_cycle(n, edges) {
        return Some(('A', n));
    }
    let branches: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    if branches.len() == 1 && deg[branches[0]] == 3 {
        let arms = arm_lengths(n, edges, branches[0]);
        if arms.len() == 3 {
            let (a, b, _c) = (arms[0], arms[1], arms[2]);
            if a == 1 && b == 1 {
                return Some(('D', n));
            }
            if a == 1 && b == 2 {
                return Some(('E', n)); // E6, E7, E8 by vertex count
            }
        }
    }
    None
}

fn euclidean_shape(q: &Quiver, edges: &BTreeMap<(usize, usize), usize>) -> Option<(char, usize)> {
    let n = q.num_vertices();
    let deg = degrees(n, edges);
    let rank = n.saturating_sub(1);
    // loop (Jordan) or 2-cycle (Kronecker) or any cycle: affine A
    if edges.keys().any(|&(a, b)| a == b) || edges.values().any(|&m| m >= 2) || has_cycle(n, edges) {
        return Some(('A', rank));
    }
    let branches: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branches.len() {
        1 => {
            let b = branches[0];
            if deg[b] == 4 {
                return Some(('D', rank)); // D~4 star
            }
            let arms = arm_lengths(n, edges, b);
            if arms.len() == 3 {
                return Some(('E', rank)); // E~6 (2,2,2), E~7 (1,3,3), E~8 (1,2,5)
            }
            None
        }
        2 => Some(('D', rank)), // two branch vertices with pendant pairs
        _ => None,
    }
}

fn has_cycle(n: usize, edges: &BTreeMap<(usize, usize), usize>) -> bool {
    // simple-graph cycle test: #edges (counting multiplicity) >= #vertices
    // on a connected graph, or any repeated edge
    let total: usize = edges.values().sum();
    total >= n.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(n: usize, arrows: &[(usize, usize)]) -> Quiver {
        Quiver::new(
            (0..n).map(|i| format!("v{i}")).collect(),
            arrows
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| Arrow { label: format!("a{k}"), source: s, target: t })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn path_graph_is_dynkin_a() {
        let q = quiver(3, &[(0, 1), (2, 1)]);
        assert_eq!(classify_graph(&q), GraphClass::Dynkin { family: 'A', rank: 3 });
    }

    #[test]
    fn degree_four_star_is_euclidean_d4() {
        // center with four neighbors, arbitrary orientation
        let q = quiver(5, &[(1, 0), (2, 0), (3, 0), (0, 4)]);
        assert_eq!(classify_graph(&q), GraphClass::Euclidean { family: 'D', rank: 4 });
    }

    #[test]
    fn three_arms_of_two_is_euclidean_e6() {
        // T(2,2,2): center 0, arms 1-2, 3-4, 5-6
        let q = quiver(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        assert_eq!(classify_graph(&q), GraphClass::Euclidean { family: 'E', rank: 6 });
    }

    #[test]
    fn loop_and_kronecker_are_euclidean_a() {
        let j = quiver(1, &[(0, 0)]);
        assert_eq!(classify_graph(&j), GraphClass::Euclidean { family: 'A', rank: 0 });
        let k = quiver(2, &[(0, 1), (0, 1)]);
        assert_eq!(classify_graph(&k), GraphClass::Euclidean { family: 'A', rank: 1 });
    }

    #[test]
    fn dense_graph_is_wild() {
        let q = quiver(2, &[(0, 1), (0, 1), (1, 0)]);
        assert_eq!(classify_graph(&q), GraphClass::Wild);
        let e = quiver(8, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)]);
        assert_eq!(classify_graph(&e), GraphClass::Wild);
    }

    #[test]
    fn invariance_under_reversal() {
        let q = quiver(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(classify_graph(&q), classify_graph(&q.reversed()));
        assert_eq!(classify_graph(&q), GraphClass::Dynkin { family: 'D', rank: 4 });
    }

    #[test]
    fn e8_and_e8_affine() {
        // E8: arms (1,2,4) from the branch vertex
        let e8 = quiver(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)],
        );
        assert_eq!(classify_graph(&e8), GraphClass::Dynkin { family: 'E', rank: 8 });
        let e8a = quiver(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)],
        );
        assert_eq!(classify_graph(&e8a), GraphClass::Euclidean { family: 'E', rank: 8 });
    }
}
