//! Integer reflection representation of finite Coxeter groups.
//!
//! Elements are square integer matrices acting on the simple-root basis of
//! the standard crystallographic representation. The representation is
//! faithful, so element equality is matrix equality, and descent sets and
//! lengths are read off from root signs.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::{CoxeterGraph, FiniteTables, GraphError};

/// Small dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mat {
    pub n: usize,
    pub a: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    /// Matrix of the simple reflection `s_i` in the basis of simple roots:
    /// `s_i(alpha_j) = alpha_j - cart[i][j] * alpha_i`.
    pub fn reflection(cart: &[Vec<i64>], i: usize) -> Self {
        let n = cart.len();
        let mut m = Mat::identity(n);
        for j in 0..n {
            m.a[i * n + j] -= cart[i][j];
        }
        m
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        debug_assert_eq!(n, other.n);
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let v = self.a[i * n + k];
                if v == 0 {
                    continue;
                }
                let row = &other.a[k * n..(k + 1) * n];
                let dst = &mut out[i * n..(i + 1) * n];
                for j in 0..n {
                    dst[j] += v * row[j];
                }
            }
        }
        Mat { n, a: out }
    }

    /// Image of a coordinate vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n];
        for (j, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..n {
                out[i] += self.a[i * n + j] * c;
            }
        }
        out
    }

    /// True when column `j` is non-positive (a negative root).
    pub fn col_negative(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.a[i * self.n + j] <= 0)
    }
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().all(|&c| c <= 0)
}

/// An exact element of a finite Coxeter group `W`.
///
/// Stores both the matrix and its inverse so that left and right descent
/// sets are sign checks on columns.
#[derive(Clone)]
pub struct CoxeterElement {
    graph: CoxeterGraph,
    mat: Mat,
    inv: Mat,
    len: OnceLock<usize>,
}

impl PartialEq for CoxeterElement {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.mat == other.mat
    }
}
impl Eq for CoxeterElement {}

impl std::hash::Hash for CoxeterElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl std::fmt::Debug for CoxeterElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let word: Vec<&str> = self
            .reduced_word()
            .into_iter()
            .map(|i| self.graph.vertex_name(i))
            .collect();
        write!(f, "w[{}]", word.join(" "))
    }
}

impl CoxeterElement {
    pub fn identity(graph: &CoxeterGraph) -> Self {
        let n = graph.rank();
        CoxeterElement {
            graph: graph.clone(),
            mat: Mat::identity(n),
            inv: Mat::identity(n),
            len: OnceLock::from(0),
        }
    }

    pub fn generator(graph: &CoxeterGraph, i: usize) -> Self {
        let m = graph.gen_mat(i).clone();
        CoxeterElement {
            graph: graph.clone(),
            mat: m.clone(),
            inv: m,
            len: OnceLock::from(1),
        }
    }

    pub(crate) fn from_mat(graph: &CoxeterGraph, mat: Mat) -> Self {
        // Trusted internal path: mat must be a product of generator matrices.
        let inv = invert_group_matrix(graph, &mat);
        CoxeterElement {
            graph: graph.clone(),
            mat,
            inv,
            len: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn is_identity(&self) -> bool {
        self.mat == Mat::identity(self.mat.n)
    }

    /// Group product `self * other`. Panics if the elements belong to
    /// different graphs; mixing graphs is a caller bug.
    pub fn mul(&self, other: &CoxeterElement) -> CoxeterElement {
        assert!(
            self.graph == other.graph,
            "cannot multiply elements of different Coxeter groups"
        );
        CoxeterElement {
            graph: self.graph.clone(),
            mat: self.mat.mul(&other.mat),
            inv: other.inv.mul(&self.inv),
            len: OnceLock::new(),
        }
    }

    pub fn inverse(&self) -> CoxeterElement {
        CoxeterElement {
            graph: self.graph.clone(),
            mat: self.inv.clone(),
            inv: self.mat.clone(),
            len: OnceLock::new(),
        }
    }

    /// Left product by the simple reflection `s_i`.
    pub fn left_mul_gen(&self, i: usize) -> CoxeterElement {
        let g = self.graph.gen_mat(i);
        CoxeterElement {
            graph: self.graph.clone(),
            mat: g.mul(&self.mat),
            inv: self.inv.mul(g),
            len: OnceLock::new(),
        }
    }

    /// Right product by the simple reflection `s_i`.
    pub fn right_mul_gen(&self, i: usize) -> CoxeterElement {
        let g = self.graph.gen_mat(i);
        CoxeterElement {
            graph: self.graph.clone(),
            mat: self.mat.mul(g),
            inv: g.mul(&self.inv),
            len: OnceLock::new(),
        }
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    /// Requires a finite-type graph.
    pub fn len(&self) -> usize {
        *self.len.get_or_init(|| {
            let tables = self
                .graph
                .finite_tables()
                .expect("length requires a finite-type graph");
            tables
                .positive_roots
                .iter()
                .filter(|r| is_negative(&self.mat.apply(r)))
                .count()
        })
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// `true` when `len(s_i * self) < len(self)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inv.col_negative(i)
    }

    /// `true` when `len(self * s_i) < len(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.mat.col_negative(i)
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.graph.rank())
            .filter(|&i| self.has_left_descent(i))
            .collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.graph.rank())
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    /// The lexicographically least reduced word, as vertex indices: always
    /// take the least available left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        while let Some(i) = (0..self.graph.rank()).find(|&i| cur.has_left_descent(i)) {
            out.push(i);
            cur = cur.left_mul_gen(i);
        }
        debug_assert!(cur.is_identity());
        out
    }

    /// Left weak-order prefix test: `self` is a prefix of `other`, i.e.
    /// `len(self) + len(self^-1 other) == len(other)`.
    pub fn is_prefix_of(&self, other: &CoxeterElement) -> bool {
        self.len() + self.inverse().mul(other).len() == other.len()
    }
}

/// Greedy left weak-order meet: repeatedly strip a common left descent.
pub fn weak_order_gcd(u: &CoxeterElement, v: &CoxeterElement) -> CoxeterElement {
    assert!(
        u.graph() == v.graph(),
        "weak_order_gcd requires elements of the same group"
    );
    let graph = u.graph().clone();
    let mut g = CoxeterElement::identity(&graph);
    let mut u = u.clone();
    let mut v = v.clone();
    loop {
        let common = (0..graph.rank())
            .find(|&i| u.has_left_descent(i) && v.has_left_descent(i));
        match common {
            Some(i) => {
                g = g.mul(&CoxeterElement::generator(&graph, i));
                u = u.left_mul_gen(i);
                v = v.left_mul_gen(i);
            }
            None => return g,
        }
    }
}

/// Builds the finite-type tables. Caller must have verified finite type,
/// otherwise the root closure does not terminate.
pub(crate) fn build_finite_tables(graph: &CoxeterGraph) -> FiniteTables {
    let n = graph.rank();
    let cart = graph.cartan();

    // Positive roots: close the simple roots under simple reflections,
    // keeping the positive ones.
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone(), ());
        roots.push(e);
    }
    let mut head = 0;
    while head < roots.len() {
        let r = roots[head].clone();
        head += 1;
        for i in 0..n {
            // s_i changes only coordinate i.
            let mut r2 = r.clone();
            let c: i64 = (0..n).map(|j| cart[i][j] * r[j]).sum();
            r2[i] -= c;
            if r2.iter().all(|&x| x >= 0) && !seen.contains_key(&r2) {
                seen.insert(r2.clone(), ());
                roots.push(r2);
            }
        }
    }

    // Longest element by greedy ascent: always append the least generator
    // that is not yet a right descent.
    let mut w0 = CoxeterElement::identity(graph);
    loop {
        let next = (0..n).find(|&i| !w0.has_right_descent(i));
        match next {
            Some(i) => w0 = w0.right_mul_gen(i),
            None => break,
        }
    }

    // tau(i) = j with w0 s_i w0 = s_j; a label-preserving permutation.
    let mut tau = vec![usize::MAX; n];
    for i in 0..n {
        let conj = w0.mat.mul(graph.gen_mat(i)).mul(&w0.mat);
        let j = (0..n)
            .find(|&j| conj == *graph.gen_mat(j))
            .expect("conjugation by w0 permutes the generators");
        tau[i] = j;
    }
    for i in 0..n {
        for j in 0..n {
            debug_assert_eq!(graph.label(i, j), graph.label(tau[i], tau[j]));
        }
    }

    let w0_word = w0.reduced_word();
    debug_assert_eq!(w0_word.len(), roots.len());

    FiniteTables {
        positive_roots: roots,
        w0: w0.mat.clone(),
        tau,
        w0_word,
    }
}

fn invert_group_matrix(graph: &CoxeterGraph, mat: &Mat) -> Mat {
    // Peel right descents: a right descent of w needs only w's matrix
    // (column i negative), and w * s_i1 * ... * s_ik = 1 gives the inverse
    // as s_i1 * ... * s_ik. Terminates for finite-type graphs because each
    // step shortens the element.
    let n = graph.rank();
    let id = Mat::identity(n);
    let mut cur = mat.clone();
    let mut inv = Mat::identity(n);
    while cur != id {
        let i = (0..n)
            .find(|&i| cur.col_negative(i))
            .expect("non-identity element has a right descent");
        cur = cur.mul(graph.gen_mat(i));
        inv = inv.mul(graph.gen_mat(i));
    }
    inv
}

pub(crate) fn enumerate(
    graph: &CoxeterGraph,
    cap: usize,
) -> Result<Vec<CoxeterElement>, GraphError> {
    graph.require_finite()?;
    let mut seen: HashMap<Mat, usize> = HashMap::new();
    let mut out: Vec<CoxeterElement> = vec![CoxeterElement::identity(graph)];
    seen.insert(out[0].mat.clone(), 0);
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for i in 0..graph.rank() {
            let next = cur.right_mul_gen(i);
            if !seen.contains_key(&next.mat) {
                if out.len() >= cap {
                    return Err(GraphError::OrderCapExceeded(cap));
                }
                seen.insert(next.mat.clone(), out.len());
                out.push(next);
            }
        }
    }
    Ok(out)
}
