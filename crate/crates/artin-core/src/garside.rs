//! Words in finite-type Artin groups and their Garside normal form.
//!
//! The canonical form of an element is `Delta^k u_1 ... u_m` where `Delta`
//! is the fundamental element (positive lift of the longest Coxeter element
//! `w_0`), every `u_i` is a simple element (positive lift of a Coxeter group
//! element, neither trivial nor `Delta`), and every adjacent pair is
//! left-weighted. Two words represent the same group element exactly when
//! their normal forms coincide, which decides the word problem.

use std::fmt;

use crate::coxeter::{weak_order_gcd, CoxeterElement, CoxeterGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("words belong to different graphs")]
    GraphMismatch,
    #[error("cannot parse word: {0}")]
    Parse(String),
}

/// A word in the generators of `A(Gamma)`, stored as syllables
/// `(generator, non-zero exponent)` with adjacent equal generators merged.
#[derive(Clone, PartialEq, Eq)]
pub struct ArtinWord {
    graph: CoxeterGraph,
    syllables: Vec<(usize, i64)>,
}

impl fmt::Debug for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArtinWord({})", self.to_text())
    }
}

impl ArtinWord {
    pub fn identity(graph: &CoxeterGraph) -> Self {
        ArtinWord {
            graph: graph.clone(),
            syllables: Vec::new(),
        }
    }

    pub fn generator(graph: &CoxeterGraph, name: &str) -> Result<Self, WordError> {
        let i = graph.vertex_index(name)?;
        Ok(ArtinWord {
            graph: graph.clone(),
            syllables: vec![(i, 1)],
        })
    }

    pub fn from_syllables<S: AsRef<str>>(
        graph: &CoxeterGraph,
        sylls: &[(S, i64)],
    ) -> Result<Self, WordError> {
        let mut w = ArtinWord::identity(graph);
        for (name, e) in sylls {
            let i = graph.vertex_index(name.as_ref())?;
            w.push_syllable(i, *e);
        }
        Ok(w)
    }

    pub fn from_indices(graph: &CoxeterGraph, sylls: &[(usize, i64)]) -> Self {
        let mut w = ArtinWord::identity(graph);
        for &(i, e) in sylls {
            assert!(i < graph.rank());
            w.push_syllable(i, e);
        }
        w
    }

    /// Parses the word grammar: whitespace-separated syllables `name`,
    /// `name^k`, `name^-k`, read left to right as a product.
    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<Self, WordError> {
        let mut w = ArtinWord::identity(graph);
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((name, e)) => (
                    name,
                    e.parse::<i64>()
                        .map_err(|_| WordError::Parse(format!("bad exponent in `{token}`")))?,
                ),
            };
            if name.is_empty() {
                return Err(WordError::Parse(format!("empty generator in `{token}`")));
            }
            let i = graph.vertex_index(name)?;
            w.push_syllable(i, exp);
        }
        Ok(w)
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    self.graph.vertex_name(i).to_string()
                } else {
                    format!("{}^{}", self.graph.vertex_name(i), e)
                }
            })
            .collect();
        parts.join(" ")
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter count, i.e. the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    fn push_syllable(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.0 == gen {
                last.1 += exp;
                if last.1 == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((gen, exp));
    }

    /// Concatenation with free reduction at the seam.
    pub fn concat(&self, other: &ArtinWord) -> Result<ArtinWord, WordError> {
        if self.graph != other.graph {
            return Err(WordError::GraphMismatch);
        }
        let mut out = self.clone();
        for &(g, e) in &other.syllables {
            out.push_syllable(g, e);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> ArtinWord {
        let mut out = ArtinWord::identity(&self.graph);
        for &(g, e) in self.syllables.iter().rev() {
            out.push_syllable(g, -e);
        }
        out
    }

    pub fn power(&self, n: i64) -> ArtinWord {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = ArtinWord::identity(&self.graph);
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base).expect("same graph");
        }
        out
    }

    /// Expansion into single letters `(generator, sign)`.
    pub fn letters(&self) -> Vec<(usize, i8)> {
        let mut out = Vec::with_capacity(self.len());
        for &(g, e) in &self.syllables {
            let sign = if e > 0 { 1i8 } else { -1 };
            for _ in 0..e.unsigned_abs() {
                out.push((g, sign));
            }
        }
        out
    }
}

/// A vertex subset inducing a parabolic subgroup `A_X` of `A(Gamma)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSubset {
    graph: CoxeterGraph,
    indices: Vec<usize>,
}

impl ParabolicSubset {
    pub fn new<S: AsRef<str>>(graph: &CoxeterGraph, names: &[S]) -> Result<Self, WordError> {
        let mut indices = Vec::with_capacity(names.len());
        for n in names {
            indices.push(graph.vertex_index(n.as_ref())?);
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(ParabolicSubset {
            graph: graph.clone(),
            indices,
        })
    }

    pub fn from_indices(graph: &CoxeterGraph, indices: &[usize]) -> Self {
        let mut indices: Vec<usize> = indices.to_vec();
        indices.sort_unstable();
        indices.dedup();
        assert!(indices.iter().all(|&i| i < graph.rank()));
        ParabolicSubset {
            graph: graph.clone(),
            indices,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

/// The fundamental element `Delta(X)` of a connected finite-type parabolic,
/// as a positive word over the ambient graph: the lexicographically least
/// reduced word of the longest element of `W_X`, lifted letterwise.
///
/// The result depends only on the set `X`. Errors when the induced subgraph
/// is disconnected or not of supported finite type.
pub fn delta_word(subset: &ParabolicSubset) -> Result<ArtinWord, WordError> {
    let graph = &subset.graph;
    let (sub, parents) = graph.induced_subgraph(&subset.indices);
    if !sub.is_connected() {
        return Err(GraphError::NotConnected.into());
    }
    if sub.classify_finite_type().is_none() {
        return Err(GraphError::NotFiniteType.into());
    }
    let tables = sub.require_finite()?;
    let sylls: Vec<(usize, i64)> = tables.w0_word.iter().map(|&i| (parents[i], 1)).collect();
    Ok(ArtinWord::from_indices(graph, &sylls))
}

/// Convenience wrapper over [`delta_word`] taking vertex names.
pub fn delta_word_of<S: AsRef<str>>(
    graph: &CoxeterGraph,
    names: &[S],
) -> Result<ArtinWord, WordError> {
    delta_word(&ParabolicSubset::new(graph, names)?)
}

/// `Delta` of the whole graph.
pub fn delta_of_graph(graph: &CoxeterGraph) -> Result<ArtinWord, WordError> {
    let tables = graph.require_finite()?;
    let sylls: Vec<(usize, i64)> = tables.w0_word.iter().map(|&i| (i, 1)).collect();
    Ok(ArtinWord::from_indices(graph, &sylls))
}

/// The permutation `s -> Delta s Delta^{-1}` of the generators, computed as
/// conjugation by `w_0` in `W`; always a label-preserving graph automorphism.
pub fn tau_permutation(graph: &CoxeterGraph) -> Result<Vec<usize>, WordError> {
    let tables = graph.require_finite()?;
    Ok(tables.tau.clone())
}

/// Garside normal form `Delta^inf * simples`, left-weighted and canonical.
#[derive(Clone)]
pub struct GarsideNormalForm {
    graph: CoxeterGraph,
    inf: i64,
    simples: Vec<CoxeterElement>,
}

impl PartialEq for GarsideNormalForm {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.inf == other.inf && self.simples == other.simples
    }
}
impl Eq for GarsideNormalForm {}

impl fmt::Debug for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl GarsideNormalForm {
    /// The power of `Delta` (the infimum when the tail is non-empty).
    pub fn delta_power(&self) -> i64 {
        self.inf
    }

    pub fn simples(&self) -> &[CoxeterElement] {
        &self.simples
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.simples.is_empty()
    }

    pub fn canonical_length(&self) -> usize {
        self.simples.len()
    }

    /// Re-expansion into a word: `Delta`-word power followed by the
    /// lexicographically least reduced word of each simple factor.
    pub fn render(&self) -> ArtinWord {
        let delta = delta_of_graph(&self.graph).expect("normal form exists only on finite type");
        let mut out = delta.power(self.inf);
        for s in &self.simples {
            let sylls: Vec<(usize, i64)> = s.reduced_word().into_iter().map(|i| (i, 1)).collect();
            out = out
                .concat(&ArtinWord::from_indices(&self.graph, &sylls))
                .expect("same graph");
        }
        out
    }

    /// Human-oriented rendering: `delta^k | u_1 | u_2 | ...` with each
    /// simple shown as a reduced word.
    pub fn display(&self) -> String {
        let mut parts = vec![format!("delta^{}", self.inf)];
        for s in &self.simples {
            let word: Vec<&str> = s
                .reduced_word()
                .into_iter()
                .map(|i| self.graph.vertex_name(i))
                .collect();
            parts.push(word.join(" "));
        }
        parts.join(" | ")
    }
}

/// Computes the Garside normal form of a word. Errors if the graph is not
/// of supported finite type.
pub fn normal_form(w: &ArtinWord) -> Result<GarsideNormalForm, WordError> {
    let graph = w.graph().clone();
    graph.require_finite()?;
    let w0 = graph.longest_element()?;

    let letters = w.letters();
    // Suffix count of negative letters decides how often tau has twisted
    // each pushed simple by the time all Delta^{-1} factors reach the left;
    // tau is an involution, so only the parity matters.
    let mut neg_after = vec![0usize; letters.len() + 1];
    for (i, &(_, sign)) in letters.iter().enumerate().rev() {
        neg_after[i] = neg_after[i + 1] + usize::from(sign < 0);
    }

    let mut inf: i64 = 0;
    let mut simples: Vec<CoxeterElement> = Vec::new();
    for (i, &(g, sign)) in letters.iter().enumerate() {
        let s = CoxeterElement::generator(&graph, g);
        let base = if sign > 0 {
            s
        } else {
            inf -= 1;
            w0.mul(&s)
        };
        let twisted = if neg_after[i + 1] % 2 == 1 {
            tau_element(&w0, &base)
        } else {
            base
        };
        if !twisted.is_identity() {
            simples.push(twisted);
        }
    }

    // Left-weighted normalization by local sliding: for each adjacent pair
    // (u, v), move t = gcd(u^{-1} w0, v) across the boundary.
    loop {
        let mut changed = false;
        simples.retain(|s| !s.is_identity());
        let mut i = 0;
        while i + 1 < simples.len() {
            let du = simples[i].inverse().mul(&w0);
            let t = weak_order_gcd(&du, &simples[i + 1]);
            if !t.is_identity() {
                simples[i] = simples[i].mul(&t);
                simples[i + 1] = t.inverse().mul(&simples[i + 1]);
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    simples.retain(|s| !s.is_identity());
    while simples.first().is_some_and(|s| *s == w0) {
        inf += 1;
        simples.remove(0);
    }
    debug_assert!(simples.iter().all(|s| !s.is_identity() && *s != w0));
    Ok(GarsideNormalForm {
        graph,
        inf,
        simples,
    })
}

fn tau_element(w0: &CoxeterElement, u: &CoxeterElement) -> CoxeterElement {
    w0.mul(u).mul(w0)
}

/// Decides equality of two words in `A(Gamma)` by comparing normal forms.
pub fn words_equal(a: &ArtinWord, b: &ArtinWord) -> Result<bool, WordError> {
    if a.graph() != b.graph() {
        return Err(WordError::GraphMismatch);
    }
    Ok(normal_form(a)? == normal_form(b)?)
}

/// True when `left_descents(v)` is contained in `right_descents(u)`: the
/// condition defining a left-weighted adjacent pair.
pub fn is_left_weighted_pair(u: &CoxeterElement, v: &CoxeterElement) -> bool {
    v.left_descents()
        .into_iter()
        .all(|i| u.has_right_descent(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{Family, StandardType};

    fn graph(tag: &str) -> CoxeterGraph {
        StandardType::parse(tag).unwrap().instantiate()
    }

    #[test]
    fn parse_and_print_round_trip() {
        let g = graph("A3");
        let w = ArtinWord::parse(&g, "x1 x2^-3 x3^2 x1").unwrap();
        assert_eq!(w.to_text(), "x1 x2^-3 x3^2 x1");
        let again = ArtinWord::parse(&g, &w.to_text()).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn free_reduction_is_maintained() {
        let g = graph("A2");
        let w = ArtinWord::parse(&g, "x1 x1^-1").unwrap();
        assert!(w.is_empty());
        let w = ArtinWord::parse(&g, "x1 x2 x2^-1 x1").unwrap();
        assert_eq!(w.to_text(), "x1^2");
    }

    #[test]
    fn empty_word_normalizes_to_identity() {
        let g = graph("A2");
        let nf = normal_form(&ArtinWord::identity(&g)).unwrap();
        assert!(nf.is_identity());
        assert_eq!(nf.display(), "delta^0");
    }

    #[test]
    fn cancelling_pair_normalizes_to_identity() {
        let g = graph("A2");
        let w = ArtinWord::parse(&g, "x1 x1^-1").unwrap();
        assert!(normal_form(&w).unwrap().is_identity());
    }

    #[test]
    fn braid_relation_holds_in_a2() {
        let g = graph("A2");
        let lhs = ArtinWord::parse(&g, "x1 x2 x1").unwrap();
        let rhs = ArtinWord::parse(&g, "x2 x1 x2").unwrap();
        assert!(words_equal(&lhs, &rhs).unwrap());
        let w = lhs.concat(&rhs.inverse()).unwrap();
        assert!(normal_form(&w).unwrap().is_identity());
    }

    #[test]
    fn distinct_generators_differ() {
        let g = graph("A2");
        let a = ArtinWord::parse(&g, "x1").unwrap();
        let b = ArtinWord::parse(&g, "x2").unwrap();
        assert!(!words_equal(&a, &b).unwrap());
    }

    #[test]
    fn delta_squared_in_a3_is_coxeter_element_power_four() {
        // (x1 x2 x3)^4 = Delta^2 in A(A_3).
        let g = graph("A3");
        let c = ArtinWord::parse(&g, "x1 x2 x3").unwrap();
        let nf = normal_form(&c.power(4)).unwrap();
        assert_eq!(nf.delta_power(), 2);
        assert_eq!(nf.canonical_length(), 0);
    }

    #[test]
    fn delta_word_examples() {
        let g = graph("A2");
        let d = delta_word_of(&g, &["x1", "x2"]).unwrap();
        assert_eq!(d.to_text(), "x1 x2 x1");

        let g = graph("B2");
        let d = delta_word_of(&g, &["x1", "x2"]).unwrap();
        assert_eq!(d.len(), 4);
        let explicit = ArtinWord::parse(&g, "x1 x2 x1 x2").unwrap();
        assert!(words_equal(&d, &explicit).unwrap());
    }

    #[test]
    fn delta_word_single_vertex() {
        let g = graph("A3");
        let d = delta_word_of(&g, &["x2"]).unwrap();
        assert_eq!(d.to_text(), "x2");
    }

    #[test]
    fn delta_word_rejects_disconnected_subset() {
        let g = graph("A3");
        let err = delta_word_of(&g, &["x1", "x3"]).unwrap_err();
        assert_eq!(err, WordError::Graph(GraphError::NotConnected));
    }

    #[test]
    fn delta_word_depends_only_on_set() {
        let g = graph("A3");
        let a = delta_word_of(&g, &["x3", "x1", "x2"]).unwrap();
        let b = delta_word_of(&g, &["x1", "x2", "x3"]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tau_swaps_ends_in_a2_and_fixes_b2() {
        let a2 = graph("A2");
        assert_eq!(tau_permutation(&a2).unwrap(), vec![1, 0]);
        let b2 = graph("B2");
        assert_eq!(tau_permutation(&b2).unwrap(), vec![0, 1]);
        let a1 = StandardType::new(Family::A, 1).unwrap().instantiate();
        assert_eq!(tau_permutation(&a1).unwrap(), vec![0]);
    }

    #[test]
    fn power_and_inverse() {
        let g = graph("A2");
        let w = ArtinWord::parse(&g, "x1 x2^-2").unwrap();
        assert!(w.power(0).is_empty());
        assert!(w.concat(&w.inverse()).unwrap().is_empty());
        let d = delta_word_of(&g, &["x1", "x2"]).unwrap();
        let c = ArtinWord::parse(&g, "x1 x2").unwrap();
        assert!(words_equal(&d.power(2), &c.power(3)).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent_on_render() {
        let g = graph("B3");
        let w = ArtinWord::parse(&g, "x1^-1 x2 x3 x1 x2^-2 x3 x1").unwrap();
        let nf = normal_form(&w).unwrap();
        let nf2 = normal_form(&nf.render()).unwrap();
        assert_eq!(nf, nf2);
    }

    #[test]
    fn normal_form_requires_finite_type() {
        // A 4-leaf star is affine, not finite.
        let g = CoxeterGraph::new(
            &["x1", "x2", "x3", "x4", "y"],
            &[("x1", "y", 3), ("x2", "y", 3), ("x3", "y", 3), ("x4", "y", 3)],
        )
        .unwrap();
        let w = ArtinWord::parse(&g, "x1 y").unwrap();
        assert!(matches!(
            normal_form(&w),
            Err(WordError::Graph(GraphError::NotFiniteType))
        ));
    }
}
