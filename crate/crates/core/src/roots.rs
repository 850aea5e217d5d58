//! Valued Dynkin graphs: symmetrizable Cartan matrices, Weyl reflections,
//! positive-root enumeration by reflection closure, almost positive roots and
//! their truncated reflections.
//!
//! Roots are kept in simple-root coordinates throughout; the pairing against
//! a coroot is read off a Cartan matrix row, so no separate coroot type is
//! needed.

use crate::linalg::IMat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("cartan matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("cartan matrix diagonal entry at {0} is not 2")]
    BadDiagonal(usize),
    #[error("cartan matrix off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("cartan entries ({0},{1}) and ({1},{0}) disagree on being zero")]
    AsymmetricZero(usize, usize),
    #[error("cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("cartan data is not of finite (Dynkin) type")]
    NotFiniteType,
}

/// Integer vector in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> RootVec {
        RootVec(self.0.iter().map(|&c| -c).collect())
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Element of the almost positive roots: a positive root or the negative of
/// a simple root. Vertex indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlmostPositiveRoot {
    NegativeSimple(usize),
    Positive(RootVec),
}

impl fmt::Display for AlmostPositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlmostPositiveRoot::Positive(v) => write!(f, "{v}"),
            AlmostPositiveRoot::NegativeSimple(i) => write!(f, "-a{}", i + 1),
        }
    }
}

/// Symmetrizable Cartan data for a valued graph without cycles.
///
/// Finiteness (positive definite symmetrization) is a queried property rather
/// than a construction invariant: root enumeration and catalog construction
/// reject non-finite data, while representation-level operations accept any
/// acyclic valued quiver.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    rank: usize,
    a: Vec<i64>,
    sym: Vec<i64>,
    label: Option<String>,
}

impl fmt::Debug for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CartanData(rank {}, {:?})", self.rank, self.label)
    }
}

impl CartanData {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CartanError::NotSquare { rows: n, cols: row.len() });
            }
            if row[i] != 2 {
                return Err(CartanError::BadDiagonal(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    if rows[i][j] > 0 {
                        return Err(CartanError::PositiveOffDiagonal(i, j));
                    }
                    if (rows[i][j] == 0) != (rows[j][i] == 0) {
                        return Err(CartanError::AsymmetricZero(i, j));
                    }
                }
            }
        }
        let a: Vec<i64> = rows.iter().flatten().copied().collect();
        let sym = symmetrizers(&rows).ok_or(CartanError::NotSymmetrizable)?;
        let mut data = CartanData { rank: n, a, sym, label: None };
        data.label = data.recognize_label();
        Ok(data)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.rank + j]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    pub fn type_label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn check_vertex(&self, k: usize) -> Result<(), CartanError> {
        if k < self.rank {
            Ok(())
        } else {
            Err(CartanError::VertexOutOfRange(k + 1, self.rank))
        }
    }

    /// Positive definiteness of the symmetrized matrix, i.e. Dynkin finiteness.
    pub fn is_finite_type(&self) -> bool {
        for m in 1..=self.rank {
            let minor = IMat::from_rows(
                &(0..m)
                    .map(|i| (0..m).map(|j| self.sym[i] * self.entry(i, j)).collect())
                    .collect::<Vec<_>>(),
            );
            if minor.det().sign() != num_bigint::Sign::Plus {
                return false;
            }
        }
        true
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| i == j || self.entry(i, j) == 0 || self.entry(i, j) == -1)
        })
    }

    /// Pairing of `v` against the `k`-th coroot: the `k`-th Cartan row applied
    /// to `v`.
    pub fn pairing(&self, k: usize, v: &RootVec) -> i64 {
        (0..self.rank).map(|j| self.entry(k, j) * v.0[j]).sum()
    }

    /// The simple reflection `s_k(v) = v - <v, a_k^vee> a_k`.
    pub fn simple_reflection(&self, k: usize, v: &RootVec) -> RootVec {
        let c = self.pairing(k, v);
        let mut w = v.0.clone();
        w[k] -= c;
        RootVec(w)
    }

    /// Matrix of `s_k` acting on column vectors in simple-root coordinates.
    pub fn reflection_matrix(&self, k: usize) -> IMat {
        let mut m = IMat::identity(self.rank);
        for j in 0..self.rank {
            m.set(k, j, if j == k { -1 } else { -self.entry(k, j) });
        }
        m
    }

    /// All positive roots, by breadth-first reflection closure from the
    /// simple roots. Rejects non-finite data, which would not terminate.
    pub fn positive_roots(&self) -> Result<Vec<RootVec>, CartanError> {
        if !self.is_finite_type() {
            return Err(CartanError::NotFiniteType);
        }
        let mut seen: BTreeSet<RootVec> = BTreeSet::new();
        let mut queue: Vec<RootVec> = Vec::new();
        for i in 0..self.rank {
            let s = RootVec::simple(self.rank, i);
            seen.insert(s.clone());
            queue.push(s);
        }
        while let Some(v) = queue.pop() {
            for k in 0..self.rank {
                let w = self.simple_reflection(k, &v);
                if w.is_nonnegative() && !seen.contains(&w) {
                    seen.insert(w.clone());
                    queue.push(w);
                }
            }
        }
        let mut roots: Vec<RootVec> = seen.into_iter().collect();
        roots.sort_by_key(|r| (r.height(), r.0.clone()));
        Ok(roots)
    }

    /// The almost positive roots: positive roots plus negatives of simples.
    pub fn almost_positive_roots(&self) -> Result<Vec<AlmostPositiveRoot>, CartanError> {
        let mut out: Vec<AlmostPositiveRoot> =
            (0..self.rank).map(AlmostPositiveRoot::NegativeSimple).collect();
        out.extend(self.positive_roots()?.into_iter().map(AlmostPositiveRoot::Positive));
        Ok(out)
    }

    /// The truncated reflection: fixes `-a_j` for `j != k` and acts as `s_k`
    /// otherwise, with re-tagging across the sign boundary.
    pub fn truncated_reflection(
        &self,
        k: usize,
        alpha: &AlmostPositiveRoot,
    ) -> Result<AlmostPositiveRoot, CartanError> {
        self.check_vertex(k)?;
        Ok(match alpha {
            AlmostPositiveRoot::NegativeSimple(j) if *j != k => {
                AlmostPositiveRoot::NegativeSimple(*j)
            }
            AlmostPositiveRoot::NegativeSimple(_) => {
                // s_k(-a_k) = a_k.
                AlmostPositiveRoot::Positive(RootVec::simple(self.rank, k))
            }
            AlmostPositiveRoot::Positive(v) => {
                let w = self.simple_reflection(k, v);
                if w.is_nonnegative() {
                    AlmostPositiveRoot::Positive(w)
                } else if w.neg() == RootVec::simple(self.rank, k) {
                    AlmostPositiveRoot::NegativeSimple(k)
                } else {
                    panic!("truncated reflection left the almost positive roots: s_{k}({v}) = {w}")
                }
            }
        })
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in 0..n {
                    if !seen[u] && self.entry(v, u) != 0 {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps
    }

    /// Recognize the Dynkin type of each connected component and join the
    /// labels. Used for reporting only; every algorithm is uniform in the
    /// Cartan data.
    fn recognize_label(&self) -> Option<String> {
        if !self.is_finite_type() {
            return None;
        }
        let mut labels = Vec::new();
        for comp in self.components() {
            labels.push(self.component_label(&comp)?);
        }
        Some(labels.join("+"))
    }

    fn component_label(&self, comp: &[usize]) -> Option<String> {
        let n = comp.len();
        if n == 1 {
            return Some("A1".to_string());
        }
        let weight = |i: usize, j: usize| self.entry(comp[i], comp[j]) * self.entry(comp[j], comp[i]);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if weight(i, j) != 0 {
                    edges.push((i, j, weight(i, j)));
                }
            }
        }
        if edges.len() != n - 1 {
            return None; // a cycle; not a tree
        }
        let degree =
            |i: usize| edges.iter().filter(|(a, b, _)| *a == i || *b == i).count();
        let degrees: Vec<usize> = (0..n).map(degree).collect();
        let max_deg = *degrees.iter().max().unwrap();
        let triple: Vec<i64> = edges.iter().filter(|(_, _, w)| *w == 3).map(|e| e.2).collect();
        let doubles: Vec<&(usize, usize, i64)> =
            edges.iter().filter(|(_, _, w)| *w == 2).collect();
        if !triple.is_empty() {
            return (n == 2 && triple.len() == 1).then(|| "G2".to_string());
        }
        if !doubles.is_empty() {
            if doubles.len() != 1 || max_deg > 2 {
                return None;
            }
            let &&(a, b, _) = doubles.first().unwrap();
            if n == 2 {
                return Some("B2".to_string());
            }
            let endpoint = [a, b].into_iter().find(|&v| degree(v) == 1);
            match endpoint {
                None => (n == 4).then(|| "F4".to_string()),
                Some(outer) => {
                    // Short outer vertex gives B, long outer vertex gives C.
                    let inner = if outer == a { b } else { a };
                    if self.sym[comp[outer]] < self.sym[comp[inner]] {
                        Some(format!("B{n}"))
                    } else {
                        Some(format!("C{n}"))
                    }
                }
            }
        } else {
            // Simply laced component.
            match max_deg {
                1 | 2 if degrees.iter().filter(|&&d| d == 1).count() == 2 || n == 1 => {
                    Some(format!("A{n}"))
                }
                3 => {
                    let center = (0..n).find(|&i| degree(i) == 3).unwrap();
                    if degrees.iter().filter(|&&d| d == 3).count() != 1 {
                        return None;
                    }
                    let mut arms: Vec<usize> = Vec::new();
                    for (x, y, _) in &edges {
                        let next = if *x == center {
                            Some(*y)
                        } else if *y == center {
                            Some(*x)
                        } else {
                            None
                        };
                        if let Some(mut cur) = next {
                            let mut len = 1;
                            let mut prev = center;
                            loop {
                                let step = edges.iter().find_map(|(p, q, _)| {
                                    if *p == cur && *q != prev {
                                        Some(*q)
                                    } else if *q == cur && *p != prev {
                                        Some(*p)
                                    } else {
                                        None
                                    }
                                });
                                match step {
                                    Some(nxt) => {
                                        prev = cur;
                                        cur = nxt;
                                        len += 1;
                                    }
                                    None => break,
                                }
                            }
                            arms.push(len);
                        }
                    }
                    arms.sort();
                    match arms.as_slice() {
                        [1, 1, _] => Some(format!("D{n}")),
                        [1, 2, 2] => Some("E6".to_string()),
                        [1, 2, 3] => Some("E7".to_string()),
                        [1, 2, 4] => Some("E8".to_string()),
                        _ => None,
                    }
                }
                _ => None,
            }
        }
    }
}

/// Positive integer symmetrizers `d_i` with `d_i a_ij = d_j a_ji`, found by
/// propagating ratios over each component and clearing denominators.
fn symmetrizers(rows: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = rows.len();
    // Rational d_i as (num, den) pairs per component, root fixed at 1.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let (vn, vd) = d[v].unwrap();
            for u in 0..n {
                if u == v || rows[v][u] == 0 {
                    continue;
                }
                // d_u = d_v * a_vu / a_uv
                let num = vn * rows[v][u];
                let den = vd * rows[u][v];
                let g = gcd(num.abs(), den.abs()).max(1);
                let (mut num, mut den) = (num / g, den / g);
                if den < 0 {
                    num = -num;
                    den = -den;
                }
                match d[u] {
                    None => {
                        d[u] = Some((num, den));
                        stack.push(u);
                    }
                    Some((un, ud)) => {
                        if un * den != num * ud {
                            return None;
                        }
                    }
                }
            }
        }
    }
    let lcm_den = d.iter().map(|p| p.unwrap().1).fold(1i64, lcm);
    let mut out: Vec<i64> = d.iter().map(|p| {
        let (num, den) = p.unwrap();
        num * (lcm_den / den)
    }).collect();
    if out.iter().any(|&v| v <= 0) {
        return None;
    }
    let g = out.iter().fold(0i64, |acc, &v| gcd(acc, v));
    if g > 1 {
        for v in &mut out {
            *v /= g;
        }
    }
    // Verify globally.
    for i in 0..n {
        for j in 0..n {
            if out[i] * rows[i][j] != out[j] * rows[j][i] {
                return None;
            }
        }
    }
    Some(out)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn cartan_a(n: usize) -> CartanData {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        CartanData::new(rows).unwrap()
    }

    fn cartan_g2() -> CartanData {
        CartanData::new(vec![vec![2, -1], vec![-3, 2]]).unwrap()
    }

    fn cartan_b2() -> CartanData {
        CartanData::new(vec![vec![2, -1], vec![-2, 2]]).unwrap()
    }

    fn cartan_d(n: usize) -> CartanData {
        // Path 1-2-...-(n-1) with n attached to n-2.
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for i in 0..n - 2 {
            rows[i][i + 1] = -1;
            rows[i + 1][i] = -1;
        }
        rows[n - 3][n - 1] = -1;
        rows[n - 1][n - 3] = -1;
        CartanData::new(rows).unwrap()
    }

    fn cartan_e(n: usize) -> CartanData {
        // Path 1-...-(n-1) with vertex n attached to vertex 3.
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for i in 0..n - 2 {
            rows[i][i + 1] = -1;
            rows[i + 1][i] = -1;
        }
        rows[2][n - 1] = -1;
        rows[n - 1][2] = -1;
        CartanData::new(rows).unwrap()
    }

    #[test]
    fn simple_reflection_examples() {
        let a2 = cartan_a(2);
        let a1 = RootVec::simple(2, 0);
        assert_eq!(a2.simple_reflection(0, &a1), a1.neg());
        let sum = RootVec(vec![1, 1]);
        assert_eq!(a2.simple_reflection(0, &sum), RootVec::simple(2, 1));
        // Involution on assorted vectors.
        for v in [RootVec(vec![3, -2]), RootVec(vec![0, 7]), RootVec(vec![-1, -1])] {
            for k in 0..2 {
                assert_eq!(a2.simple_reflection(k, &a2.simple_reflection(k, &v)), v);
            }
        }
    }

    #[test]
    fn reflection_matrix_agrees() {
        let g2 = cartan_g2();
        for k in 0..2 {
            let m = g2.reflection_matrix(k);
            for v in [RootVec(vec![1, 0]), RootVec(vec![2, 3]), RootVec(vec![-1, 4])] {
                assert_eq!(m.apply(&v.0), g2.simple_reflection(k, &v).0);
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(cartan_a(2).positive_roots().unwrap().len(), 3);
        assert_eq!(cartan_a(3).positive_roots().unwrap().len(), 6);
        assert_eq!(cartan_g2().positive_roots().unwrap().len(), 6);
        assert_eq!(cartan_b2().positive_roots().unwrap().len(), 4);
        assert_eq!(cartan_d(4).positive_roots().unwrap().len(), 12);
        assert_eq!(cartan_d(5).positive_roots().unwrap().len(), 20);
        assert_eq!(cartan_e(6).positive_roots().unwrap().len(), 36);
        assert_eq!(cartan_e(8).positive_roots().unwrap().len(), 120);
    }

    #[test]
    fn a2_positive_roots_explicit() {
        let roots = cartan_a(2).positive_roots().unwrap();
        assert_eq!(
            roots,
            vec![RootVec(vec![0, 1]), RootVec(vec![1, 0]), RootVec(vec![1, 1])]
        );
    }

    #[test]
    fn almost_positive_sizes() {
        assert_eq!(cartan_a(1).almost_positive_roots().unwrap().len(), 2);
        assert_eq!(cartan_a(2).almost_positive_roots().unwrap().len(), 5);
        assert_eq!(cartan_a(3).almost_positive_roots().unwrap().len(), 9);
    }

    #[test]
    fn affine_data_rejected_for_roots() {
        // The four-subspace star is symmetrizable but not finite type.
        let rows = vec![
            vec![2, -1, -1, -1, -1],
            vec![-1, 2, 0, 0, 0],
            vec![-1, 0, 2, 0, 0],
            vec![-1, 0, 0, 2, 0],
            vec![-1, 0, 0, 0, 2],
        ];
        let c = CartanData::new(rows).unwrap();
        assert!(!c.is_finite_type());
        assert_eq!(c.positive_roots(), Err(CartanError::NotFiniteType));
    }

    #[test]
    fn truncated_reflection_cases() {
        let a2 = cartan_a(2);
        let m_a2 = AlmostPositiveRoot::NegativeSimple(1);
        assert_eq!(a2.truncated_reflection(0, &m_a2).unwrap(), m_a2);
        assert_eq!(
            a2.truncated_reflection(0, &AlmostPositiveRoot::NegativeSimple(0)).unwrap(),
            AlmostPositiveRoot::Positive(RootVec::simple(2, 0))
        );
        assert_eq!(
            a2.truncated_reflection(0, &AlmostPositiveRoot::Positive(RootVec(vec![1, 1]))).unwrap(),
            AlmostPositiveRoot::Positive(RootVec::simple(2, 1))
        );
        assert_eq!(
            a2.truncated_reflection(0, &AlmostPositiveRoot::Positive(RootVec::simple(2, 0)))
                .unwrap(),
            AlmostPositiveRoot::NegativeSimple(0)
        );
    }

    #[test]
    fn truncated_reflection_involution_exhaustive() {
        for c in [
            cartan_a(2),
            cartan_a(8),
            cartan_b2(),
            cartan_g2(),
            cartan_d(4),
            cartan_d(8),
            cartan_e(6),
            cartan_e(8),
        ] {
            let apr = c.almost_positive_roots().unwrap();
            for k in 0..c.rank() {
                for alpha in &apr {
                    let once = c.truncated_reflection(k, alpha).unwrap();
                    assert!(apr.contains(&once));
                    let twice = c.truncated_reflection(k, &once).unwrap();
                    assert_eq!(&twice, alpha, "sigma_{k} not an involution at {alpha}");
                }
            }
        }
    }

    #[test]
    fn reflection_permutes_other_positive_roots() {
        for c in [cartan_a(3), cartan_b2(), cartan_g2(), cartan_d(4)] {
            let pos = c.positive_roots().unwrap();
            for k in 0..c.rank() {
                let alpha_k = RootVec::simple(c.rank(), k);
                let mut images = BTreeSet::new();
                for v in pos.iter().filter(|v| **v != alpha_k) {
                    let w = c.simple_reflection(k, v);
                    assert!(w.is_nonnegative());
                    assert!(pos.contains(&w));
                    images.insert(w);
                }
                assert_eq!(images.len(), pos.len() - 1);
                assert_eq!(c.simple_reflection(k, &alpha_k), alpha_k.neg());
            }
        }
    }

    #[test]
    fn type_labels() {
        assert_eq!(cartan_a(5).type_label(), Some("A5"));
        assert_eq!(cartan_b2().type_label(), Some("B2"));
        assert_eq!(cartan_g2().type_label(), Some("G2"));
        assert_eq!(cartan_d(4).type_label(), Some("D4"));
        assert_eq!(cartan_e(7).type_label(), Some("E7"));
        // B3: double bond at the end, outer vertex short.
        let b3 = CartanData::new(vec![
            vec![2, -1, 0],
            vec![-1, 2, -1],
            vec![0, -2, 2],
        ])
        .unwrap();
        assert_eq!(b3.symmetrizers(), &[2, 2, 1]);
        assert_eq!(b3.type_label(), Some("B3"));
        let c3 = CartanData::new(vec![
            vec![2, -1, 0],
            vec![-1, 2, -2],
            vec![0, -1, 2],
        ])
        .unwrap();
        assert_eq!(c3.type_label(), Some("C3"));
        assert_eq!(c3.positive_roots().unwrap().len(), 9);
        assert_eq!(b3.positive_roots().unwrap().len(), 9);
    }
}
