//! Construction kit for derivation scripts.
//!
//! A [`DerivationBuilder`] maintains the current word and the elementary
//! moves applied so far, every move validated as it is recorded. On top of
//! the raw moves it offers:
//!
//! - `subst`: replace an occurrence of one side of a relator instance by
//!   the other side (one relator insertion plus cancellations);
//! - `glue`: convert a subword that is a reduced word of a Coxeter group
//!   element into any other reduced word of the same element, through a
//!   breadth-first path of single braid moves;
//! - `bridge`: bounded search replacing a small window by a target window
//!   using relator substitutions, cancellations, and pair insertions;
//! - `reversed` / `mirrored` / `mapped`: derived scripts obtained by
//!   undoing the moves, conjugating the whole derivation by inversion, or
//!   renaming letters along a graph automorphism;
//! - `inline_relator`: replace every insertion of a designated relator by
//!   a sub-derivation that manufactures the same letters from other
//!   relators, so a derivation over an augmented presentation becomes a
//!   derivation over the base presentation.
//!
//! Everything is replayed against [`check_derivation`] when the final
//! script is extracted, so a bug here cannot produce a false proof.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{
    check_derivation, find_relator_form, invert_letters, letters_to_text,
    presentation_relator_map, reduce_letters, DerivationScript, Letter, Step,
};
use crate::coxeter::CoxeterGraph;
use crate::presentation::Presentation;

#[derive(Debug, Clone)]
enum RichStep {
    Rel {
        tag: String,
        pos: usize,
        inv: bool,
        rot: usize,
        inserted: Vec<Letter>,
    },
    Cancel {
        pos: usize,
        first: Letter,
    },
    Insert {
        gen: String,
        sign: i8,
        pos: usize,
    },
}

impl RichStep {
    fn public(&self) -> Step {
        match self {
            RichStep::Rel { tag, pos, inv, rot, .. } => Step::Rel {
                tag: tag.clone(),
                pos: *pos,
                inv: *inv,
                rot: *rot,
            },
            RichStep::Cancel { pos, .. } => Step::Cancel { pos: *pos },
            RichStep::Insert { gen, sign, pos } => Step::Insert {
                gen: gen.clone(),
                sign: *sign,
                pos: *pos,
            },
        }
    }
}

pub struct DerivationBuilder {
    pres: Presentation,
    rels: HashMap<String, Vec<Letter>>,
    start: Vec<Letter>,
    word: Vec<Letter>,
    steps: Vec<RichStep>,
}

impl DerivationBuilder {
    pub fn new(pres: &Presentation, start: &[Letter]) -> Self {
        DerivationBuilder {
            pres: pres.clone(),
            rels: presentation_relator_map(pres),
            start: start.to_vec(),
            word: start.to_vec(),
            steps: Vec::new(),
        }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// Finishes the script with the given claimed end word and replays it
    /// through the checker.
    pub fn into_script(self, end: &[Letter]) -> DerivationScript {
        let script = DerivationScript {
            start: self.start,
            steps: self.steps.iter().map(|s| s.public()).collect(),
            end: end.to_vec(),
        };
        assert_eq!(
            check_derivation(&self.pres, &script),
            Ok(true),
            "constructed script failed validation"
        );
        script
    }

    /// Raw relator insertion.
    pub fn rel_raw(&mut self, pos: usize, tag: &str, inv: bool, rot: usize) {
        let mut rel = self.rels.get(tag).unwrap_or_else(|| panic!("no relator `{tag}`")).clone();
        if inv {
            rel = invert_letters(&rel);
        }
        assert!(rot < rel.len());
        let rel = super::rotate_left(&rel, rot);
        assert!(pos <= self.word.len());
        self.word.splice(pos..pos, rel.iter().cloned());
        self.steps.push(RichStep::Rel {
            tag: tag.to_string(),
            pos,
            inv,
            rot,
            inserted: rel,
        });
    }

    pub fn cancel(&mut self, pos: usize) {
        assert!(
            pos + 1 < self.word.len(),
            "cancel position {pos} out of range"
        );
        assert_eq!(
            self.word[pos],
            self.word[pos + 1].inverse(),
            "letters at {pos} do not cancel: {} {}",
            letters_to_text(&self.word[pos..pos + 1]),
            letters_to_text(&self.word[pos + 1..pos + 2])
        );
        let first = self.word[pos].clone();
        self.word.drain(pos..pos + 2);
        self.steps.push(RichStep::Cancel { pos, first });
    }

    pub fn insert_pair(&mut self, pos: usize, gen: &str, sign: i8) {
        assert!(pos <= self.word.len());
        let l = Letter::new(gen, sign);
        self.word.splice(pos..pos, [l.clone(), l.inverse()]);
        self.steps.push(RichStep::Insert {
            gen: gen.to_string(),
            sign,
            pos,
        });
    }

    /// Inserts the literal word `u^-1 u` at `pos` by nested pair moves.
    pub fn build_inverse_pair(&mut self, pos: usize, u: &[Letter]) {
        let m = u.len();
        for k in (0..m).rev() {
            // Insert (u_k^-1, u_k) so that the accumulated prefix is the
            // reversal-inversion of u[..k+1] followed by u[..k+1].
            self.insert_pair(pos + (m - 1 - k), &u[k].gen, -u[k].sign);
        }
        debug_assert_eq!(
            &self.word[pos..pos + 2 * m],
            [invert_letters(u), u.to_vec()].concat()
        );
    }

    /// Replaces `from` (present at `pos`) by `to`, where `from^-1 to` must
    /// be a rotation of a presentation relator or its inverse.
    pub fn subst(&mut self, pos: usize, from: &[Letter], to: &[Letter]) {
        assert!(
            self.word.len() >= pos + from.len()
                && &self.word[pos..pos + from.len()] == from,
            "subst: `{}` not found at {pos} in `{}`",
            letters_to_text(from),
            letters_to_text(&self.word)
        );
        let needle: Vec<Letter> = [invert_letters(from), to.to_vec()].concat();
        debug_assert_eq!(
            reduce_letters(&needle).len(),
            needle.len(),
            "subst needle must be freely reduced"
        );
        let (tag, inv, rot) = find_relator_form(&self.pres, &needle).unwrap_or_else(|| {
            panic!(
                "subst: `{}` -> `{}` is not a one-relator move",
                letters_to_text(from),
                letters_to_text(to)
            )
        });
        self.rel_raw(pos + from.len(), &tag, inv, rot);
        for k in 0..from.len() {
            self.cancel(pos + from.len() - 1 - k);
        }
        debug_assert_eq!(&self.word[pos..pos + to.len()], to);
    }

    /// Greedy leftmost free reduction of a window, recording cancels.
    pub fn reduce_window(&mut self, pos: usize, len: usize) {
        let mut len = len;
        loop {
            let mut changed = false;
            let mut i = pos;
            while i + 1 < pos + len {
                if self.word[i] == self.word[i + 1].inverse() {
                    self.cancel(i);
                    len -= 2;
                    changed = true;
                    i = i.saturating_sub(1).max(pos);
                } else {
                    i += 1;
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Rewrites the subword at `pos` (a reduced word of some element of
    /// `W(graph)`, all letters positive or all negative) into `target`,
    /// another reduced word of the same element, by a path of braid moves.
    pub fn glue(&mut self, pos: usize, target: &[Letter], graph: &CoxeterGraph) {
        let len = target.len();
        let current: Vec<Letter> = self.word[pos..pos + len].to_vec();
        if current == target {
            return;
        }
        let negative = current.iter().all(|l| l.sign < 0);
        assert!(
            negative || current.iter().all(|l| l.sign > 0),
            "glue needs a uniformly signed segment"
        );
        let to_indices = |w: &[Letter]| -> Vec<usize> {
            w.iter()
                .map(|l| graph.vertex_index(&l.gen).expect("letter in graph"))
                .collect()
        };
        let (from_pos, to_pos) = if negative {
            (
                to_indices(&invert_letters(&current)),
                to_indices(&invert_letters(target)),
            )
        } else {
            (to_indices(&current), to_indices(target))
        };
        let path = reduced_word_path(graph, &from_pos, &to_pos).unwrap_or_else(|| {
            panic!(
                "glue: no braid path `{}` -> `{}`",
                letters_to_text(&current),
                letters_to_text(target)
            )
        });
        for (q, a, b, m) in path {
            let alt_ab = alternating_letters(graph, a, b, m);
            let alt_ba = alternating_letters(graph, b, a, m);
            if negative {
                let widx = pos + len - q - m as usize;
                self.subst(widx, &invert_letters(&alt_ab), &invert_letters(&alt_ba));
            } else {
                self.subst(pos + q, &alt_ab, &alt_ba);
            }
        }
        debug_assert_eq!(&self.word[pos..pos + len], target);
    }

    /// Bounded search rewriting the window `[pos, pos + from_len)` into
    /// `target` using relator substitutions, cancels, and pair insertions.
    /// Panics if no derivation is found within the limits; intended for
    /// small windows.
    pub fn bridge(&mut self, pos: usize, from_len: usize, target: &[Letter]) {
        let from: Vec<Letter> = self.word[pos..pos + from_len].to_vec();
        if from == target {
            return;
        }
        let moves = bridge_search(&self.pres, &self.rels, &from, target).unwrap_or_else(|| {
            panic!(
                "bridge failed: `{}` -> `{}`",
                letters_to_text(&from),
                letters_to_text(target)
            )
        });
        for mv in moves {
            match mv {
                BridgeMove::Subst { from, to, at } => self.subst(pos + at, &from, &to),
                BridgeMove::InsertRel { tag, inv, rot, at } => {
                    self.rel_raw(pos + at, &tag, inv, rot)
                }
                BridgeMove::Cancel { at } => self.cancel(pos + at),
                BridgeMove::Pair { gen, sign, at } => self.insert_pair(pos + at, &gen, sign),
            }
        }
        debug_assert_eq!(&self.word[pos..pos + target.len()], target);
    }

    /// The derivation run backwards: from the current word to the start.
    pub fn reversed(&self) -> DerivationBuilder {
        let mut out = DerivationBuilder::new(&self.pres, &self.word);
        for step in self.steps.iter().rev() {
            match step {
                RichStep::Insert { pos, .. } => out.cancel(*pos),
                RichStep::Cancel { pos, first } => {
                    out.insert_pair(*pos, &first.gen, first.sign)
                }
                RichStep::Rel { pos, inserted, .. } => {
                    let inv_word = invert_letters(inserted);
                    let (tag, inv, rot) =
                        find_relator_form(&out.pres, &inv_word).expect("inverse relator form");
                    let len = inserted.len();
                    out.rel_raw(pos + len, &tag, inv, rot);
                    for k in 0..len {
                        out.cancel(pos + len - 1 - k);
                    }
                }
            }
        }
        assert_eq!(out.word, self.start, "reversal did not reach the start");
        out
    }

    /// The derivation conjugated by inversion: transforms the letterwise
    /// inverse of the start into the letterwise inverse of the current
    /// word.
    pub fn mirrored(&self) -> DerivationBuilder {
        let mut out = DerivationBuilder::new(&self.pres, &invert_letters(&self.start));
        let mut scratch = self.start.clone();
        for step in &self.steps {
            let n = scratch.len();
            match step {
                RichStep::Rel { pos, inserted, .. } => {
                    let inv_word = invert_letters(inserted);
                    let (tag, inv, rot) =
                        find_relator_form(&out.pres, &inv_word).expect("inverse relator form");
                    out.rel_raw(n - pos, &tag, inv, rot);
                    scratch.splice(*pos..*pos, inserted.iter().cloned());
                }
                RichStep::Cancel { pos, .. } => {
                    out.cancel(n - pos - 2);
                    scratch.drain(*pos..*pos + 2);
                }
                RichStep::Insert { gen, sign, pos } => {
                    out.insert_pair(n - pos, gen, *sign);
                    let l = Letter::new(gen, *sign);
                    scratch.splice(*pos..*pos, [l.clone(), l.inverse()]);
                }
            }
        }
        assert_eq!(out.word, invert_letters(&self.word));
        out
    }

    /// The derivation with letters renamed along a bijection of generator
    /// names (a graph automorphism), replayed over `target` whose relators
    /// must cover the renamed insertions.
    pub fn mapped(
        &self,
        target: &Presentation,
        rename: &HashMap<String, String>,
    ) -> DerivationBuilder {
        let map_letter = |l: &Letter| Letter {
            gen: rename.get(&l.gen).cloned().unwrap_or_else(|| l.gen.clone()),
            sign: l.sign,
        };
        let map_word = |w: &[Letter]| -> Vec<Letter> { w.iter().map(map_letter).collect() };
        let mut out = DerivationBuilder::new(target, &map_word(&self.start));
        for step in &self.steps {
            match step {
                RichStep::Rel { pos, inserted, .. } => {
                    let image = map_word(inserted);
                    let (tag, inv, rot) = find_relator_form(target, &image)
                        .unwrap_or_else(|| {
                            panic!(
                                "mapped: no relator matches `{}`",
                                letters_to_text(&image)
                            )
                        });
                    out.rel_raw(*pos, &tag, inv, rot);
                }
                RichStep::Cancel { pos, .. } => out.cancel(*pos),
                RichStep::Insert { gen, sign, pos } => {
                    let name = rename.get(gen).cloned().unwrap_or_else(|| gen.clone());
                    out.insert_pair(*pos, &name, *sign);
                }
            }
        }
        assert_eq!(out.word, map_word(&self.word));
        out
    }

    /// Rebuilds the derivation over `base`, replacing every insertion of
    /// the relator tagged `aux` by a sub-derivation. `make_aux` must build
    /// the full relator word of `aux` (as stored in `self`) from the empty
    /// word at position 0 over `base`; its mirror handles inverted
    /// insertions and rotations are produced by conjugation with pair
    /// insertions.
    pub fn inline_relator(
        &self,
        base: &Presentation,
        aux: &str,
        make_aux: &DerivationBuilder,
    ) -> DerivationBuilder {
        let aux_word = self.rels[aux].clone();
        assert!(make_aux.start.is_empty());
        assert_eq!(make_aux.word, aux_word, "make_aux must build the aux relator");
        let make_aux_inv = make_aux.mirrored();

        let mut out = DerivationBuilder::new(base, &self.start);
        for step in &self.steps {
            match step {
                RichStep::Rel { tag, pos, inserted, .. } if tag == aux => {
                    // inserted = rotate_left(aux_word^eps, k) = t . h where
                    // aux_word^eps = h . t. Manufacture h^-1 (h t) h at pos
                    // and cancel the junction, leaving exactly t . h.
                    let (eps_inv, k) = locate_rotation(&aux_word, inserted)
                        .expect("aux insertion must be a rotation of the aux relator");
                    let sub = if eps_inv { &make_aux_inv } else { make_aux };
                    let full = if eps_inv {
                        invert_letters(&aux_word)
                    } else {
                        aux_word.clone()
                    };
                    let h = &full[..k];
                    out.build_inverse_pair(*pos, h);
                    out.replay_offset(sub, pos + k);
                    for j in 0..k {
                        out.cancel(pos + k - 1 - j);
                    }
                    debug_assert_eq!(&out.word[*pos..pos + inserted.len()], inserted);
                }
                RichStep::Rel { tag, pos, inv, rot, .. } => {
                    out.rel_raw(*pos, tag, *inv, *rot);
                }
                RichStep::Cancel { pos, .. } => out.cancel(*pos),
                RichStep::Insert { gen, sign, pos } => out.insert_pair(*pos, gen, *sign),
            }
        }
        assert_eq!(out.word, self.word);
        out
    }

    /// Replays another builder's steps at a positional offset.
    pub fn replay_offset(&mut self, other: &DerivationBuilder, offset: usize) {
        for step in &other.steps {
            match step {
                RichStep::Rel { tag, pos, inv, rot, .. } => {
                    self.rel_raw(pos + offset, tag, *inv, *rot)
                }
                RichStep::Cancel { pos, .. } => self.cancel(pos + offset),
                RichStep::Insert { gen, sign, pos } => {
                    self.insert_pair(pos + offset, gen, *sign)
                }
            }
        }
    }

    /// Concatenates `other` (whose start must equal the current word).
    pub fn append(&mut self, other: &DerivationBuilder) {
        assert_eq!(self.word, other.start);
        self.replay_offset(other, 0);
    }
}

/// `target` as a rotation of `base` or of its inverse: returns
/// `(inverted, k)` with `target = rotate_left(base^eps, k)`.
fn locate_rotation(base: &[Letter], target: &[Letter]) -> Option<(bool, usize)> {
    if base.len() != target.len() {
        return None;
    }
    for inv in [false, true] {
        let b = if inv {
            invert_letters(base)
        } else {
            base.to_vec()
        };
        for k in 0..b.len() {
            if super::rotate_left(&b, k) == target {
                return Some((inv, k));
            }
        }
    }
    None
}

fn alternating_letters(graph: &CoxeterGraph, a: usize, b: usize, m: u32) -> Vec<Letter> {
    (0..m)
        .map(|k| {
            let idx = if k % 2 == 0 { a } else { b };
            Letter::new(graph.vertex_name(idx), 1)
        })
        .collect()
}

/// Breadth-first path between two reduced words of the same element in
/// `W(graph)`, as a list of braid moves `(position, a, b, m)` replacing
/// `prod(a, b, m)` by `prod(b, a, m)` at the position.
pub fn reduced_word_path(
    graph: &CoxeterGraph,
    from: &[usize],
    to: &[usize],
) -> Option<Vec<(usize, usize, usize, u32)>> {
    if from == to {
        return Some(Vec::new());
    }
    let mut parents: HashMap<Vec<usize>, (Vec<usize>, (usize, usize, usize, u32))> =
        HashMap::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    queue.push_back(from.to_vec());
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(from.to_vec());
    while let Some(cur) = queue.pop_front() {
        for q in 0..cur.len() {
            let a = cur[q];
            if q + 1 >= cur.len() {
                continue;
            }
            let b = cur[q + 1];
            if a == b {
                continue;
            }
            let m = graph.label(a, b);
            if m < 2 || q + (m as usize) > cur.len() {
                continue;
            }
            // Verify the segment alternates a, b for m letters.
            let alternates = (0..m as usize).all(|k| {
                cur[q + k] == if k % 2 == 0 { a } else { b }
            });
            if !alternates {
                continue;
            }
            let mut next = cur.clone();
            for (k, slot) in next[q..q + m as usize].iter_mut().enumerate() {
                *slot = if k % 2 == 0 { b } else { a };
            }
            if seen.contains(&next) {
                continue;
            }
            seen.insert(next.clone());
            parents.insert(next.clone(), (cur.clone(), (q, a, b, m)));
            if next == to {
                // Reconstruct.
                let mut path = Vec::new();
                let mut w = next;
                while w != from {
                    let (prev, mv) = parents[&w].clone();
                    path.push(mv);
                    w = prev;
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(next);
        }
    }
    None
}

#[derive(Debug, Clone)]
enum BridgeMove {
    Subst {
        from: Vec<Letter>,
        to: Vec<Letter>,
        at: usize,
    },
    InsertRel {
        tag: String,
        inv: bool,
        rot: usize,
        at: usize,
    },
    Cancel {
        at: usize,
    },
    Pair {
        gen: String,
        sign: i8,
        at: usize,
    },
}

/// Bounded breadth-first rewriting search between two small windows.
fn bridge_search(
    pres: &Presentation,
    rels: &HashMap<String, Vec<Letter>>,
    from: &[Letter],
    to: &[Letter],
) -> Option<Vec<BridgeMove>> {
    const MAX_STATES: usize = 400_000;
    const MAX_DEPTH: usize = 10;
    let max_len = from.len().max(to.len()) + 4;

    // Substitution patterns (from, to) from every relator rotation split.
    struct Pat {
        from: Vec<Letter>,
        to: Vec<Letter>,
        tag: String,
        inv: bool,
        rot: usize,
    }
    let mut pats: Vec<Pat> = Vec::new();
    for (tag, letters) in rels {
        if letters.is_empty() {
            continue;
        }
        for inv in [false, true] {
            let base = if inv {
                invert_letters(letters)
            } else {
                letters.clone()
            };
            for rot in 0..base.len() {
                let rho = super::rotate_left(&base, rot);
                for s in 0..rho.len() {
                    pats.push(Pat {
                        from: invert_letters(&rho[..s]),
                        to: rho[s..].to_vec(),
                        tag: tag.clone(),
                        inv,
                        rot,
                    });
                }
            }
        }
    }
    let gens: Vec<String> = pres.generators().to_vec();

    #[derive(Clone)]
    struct Edge {
        parent: usize,
        mv: BridgeMove,
    }
    let mut states: Vec<Vec<Letter>> = vec![from.to_vec()];
    let mut depth: Vec<usize> = vec![0];
    let mut edges: Vec<Option<Edge>> = vec![None];
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    seen.insert(from.to_vec());
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    let mut goal = None;
    if from == to {
        return Some(Vec::new());
    }

    'outer: while let Some(cur) = queue.pop_front() {
        if depth[cur] >= MAX_DEPTH {
            continue;
        }
        let word = states[cur].clone();
        let push = |next: Vec<Letter>,
                        mv: BridgeMove,
                        states: &mut Vec<Vec<Letter>>,
                        depth: &mut Vec<usize>,
                        edges: &mut Vec<Option<Edge>>,
                        seen: &mut HashSet<Vec<Letter>>,
                        queue: &mut VecDeque<usize>|
         -> Option<usize> {
            if next.len() > max_len || seen.contains(&next) || states.len() >= MAX_STATES {
                return None;
            }
            seen.insert(next.clone());
            states.push(next.clone());
            depth.push(depth[cur] + 1);
            edges.push(Some(Edge { parent: cur, mv }));
            let id = states.len() - 1;
            if next == to {
                return Some(id);
            }
            queue.push_back(id);
            None
        };

        // Cancellations.
        for at in 0..word.len().saturating_sub(1) {
            if word[at] == word[at + 1].inverse() {
                let mut next = word.clone();
                next.drain(at..at + 2);
                if let Some(g) = push(
                    next,
                    BridgeMove::Cancel { at },
                    &mut states,
                    &mut depth,
                    &mut edges,
                    &mut seen,
                    &mut queue,
                ) {
                    goal = Some(g);
                    break 'outer;
                }
            }
        }
        // Substitutions.
        for p in &pats {
            if p.from.is_empty() {
                // Pure insertion of a full relator rotation.
                if word.len() + p.to.len() > max_len {
                    continue;
                }
                for at in 0..=word.len() {
                    let mut next = word.clone();
                    next.splice(at..at, p.to.iter().cloned());
                    if let Some(g) = push(
                        next,
                        BridgeMove::InsertRel {
                            tag: p.tag.clone(),
                            inv: p.inv,
                            rot: p.rot,
                            at,
                        },
                        &mut states,
                        &mut depth,
                        &mut edges,
                        &mut seen,
                        &mut queue,
                    ) {
                        goal = Some(g);
                        break 'outer;
                    }
                }
            } else {
                if word.len() < p.from.len() {
                    continue;
                }
                for at in 0..=word.len() - p.from.len() {
                    if word[at..at + p.from.len()] != p.from[..] {
                        continue;
                    }
                    let mut next = word[..at].to_vec();
                    next.extend_from_slice(&p.to);
                    next.extend_from_slice(&word[at + p.from.len()..]);
                    if let Some(g) = push(
                        next,
                        BridgeMove::Subst {
                            from: p.from.clone(),
                            to: p.to.clone(),
                            at,
                        },
                        &mut states,
                        &mut depth,
                        &mut edges,
                        &mut seen,
                        &mut queue,
                    ) {
                        goal = Some(g);
                        break 'outer;
                    }
                }
            }
        }
        // Pair insertions.
        if word.len() + 2 <= max_len {
            for gen in &gens {
                for sign in [1i8, -1] {
                    for at in 0..=word.len() {
                        let l = Letter::new(gen, sign);
                        let mut next = word.clone();
                        next.splice(at..at, [l.clone(), l.inverse()]);
                        if let Some(g) = push(
                            next,
                            BridgeMove::Pair {
                                gen: gen.clone(),
                                sign,
                                at,
                            },
                            &mut states,
                            &mut depth,
                            &mut edges,
                            &mut seen,
                            &mut queue,
                        ) {
                            goal = Some(g);
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    let goal = goal?;
    let mut moves = Vec::new();
    let mut cur = goal;
    while let Some(e) = &edges[cur] {
        moves.push(e.mv.clone());
        cur = e.parent;
    }
    moves.reverse();
    Some(moves)
}
