//! Finitely presented groups: Artin presentations, an exact-sequence
//! presentation combiner, Tietze elimination, abelianization invariants,
//! and a bounded coset enumerator used as a desk-scale order oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coxeter::CoxeterGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator name `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("name collision between lifted and kernel generators: `{0}`")]
    NameCollision(String),
    #[error("missing extension datum: {0}")]
    MissingDatum(String),
    #[error("relator {0} does not define generator `{1}`")]
    NotSolvable(usize, String),
    #[error("relator index {0} out of range")]
    BadRelatorIndex(usize),
    #[error("cannot parse: {0}")]
    Parse(String),
    #[error("coset enumeration exceeded {0} cosets")]
    CosetCapExceeded(usize),
}

/// A word in a free group over named generators, stored as syllables
/// `(name, non-zero exponent)` with adjacent equal names merged, i.e. kept
/// freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    syllables: Vec<(String, i64)>,
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({})", self.to_text())
    }
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn gen(name: &str) -> Self {
        let mut w = FreeWord::empty();
        w.push(name, 1);
        w
    }

    pub fn from_syllables<S: AsRef<str>>(sylls: &[(S, i64)]) -> Self {
        let mut w = FreeWord::empty();
        for (n, e) in sylls {
            w.push(n.as_ref(), *e);
        }
        w
    }

    /// Parses the word grammar `name`, `name^k`, `name^-k` separated by
    /// whitespace. The empty string is the empty word.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut w = FreeWord::empty();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((n, e)) => (
                    n,
                    e.parse::<i64>().map_err(|_| {
                        PresentationError::Parse(format!("bad exponent in `{token}`"))
                    })?,
                ),
            };
            if name.is_empty() {
                return Err(PresentationError::Parse(format!(
                    "empty generator in `{token}`"
                )));
            }
            w.push(name, exp);
        }
        Ok(w)
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|(n, e)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        parts.join(" ")
    }

    pub fn push(&mut self, name: &str, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.0 == name {
                last.1 += exp;
                if last.1 == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((name.to_string(), exp));
    }

    pub fn syllables(&self) -> &[(String, i64)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter count.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Letters as `(name, +1/-1)` pairs.
    pub fn letters(&self) -> Vec<(String, i8)> {
        let mut out = Vec::with_capacity(self.len());
        for (n, e) in &self.syllables {
            let s = if *e > 0 { 1i8 } else { -1 };
            for _ in 0..e.unsigned_abs() {
                out.push((n.clone(), s));
            }
        }
        out
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for (n, e) in &other.syllables {
            out.push(n, *e);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        let mut out = FreeWord::empty();
        for (n, e) in self.syllables.iter().rev() {
            out.push(n, -e);
        }
        out
    }

    pub fn power(&self, n: i64) -> FreeWord {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = FreeWord::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Already maintained by construction; provided for explicitness.
    pub fn free_reduce(&self) -> FreeWord {
        self.clone()
    }

    /// Strips matching conjugating ends: `a w a^-1` cyclically reduces
    /// to the cyclic reduction of `w`.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let mut letters = self.letters();
        loop {
            match (letters.first(), letters.last()) {
                (Some(a), Some(b))
                    if letters.len() >= 2 && a.0 == b.0 && a.1 == -b.1 =>
                {
                    letters.remove(0);
                    letters.pop();
                }
                _ => break,
            }
        }
        let sylls: Vec<(String, i64)> =
            letters.into_iter().map(|(n, s)| (n, s as i64)).collect();
        FreeWord::from_syllables(&sylls)
    }

    /// Substitutes `replacement` for every occurrence of the generator
    /// `name`, then freely reduces.
    pub fn substitute(&self, name: &str, replacement: &FreeWord) -> FreeWord {
        let mut out = FreeWord::empty();
        for (n, e) in &self.syllables {
            if n == name {
                out = out.concat(&replacement.power(*e));
            } else {
                out.push(n, *e);
            }
        }
        out
    }

    pub fn mentions(&self, name: &str) -> bool {
        self.syllables.iter().any(|(n, _)| n == name)
    }

    /// Signed exponent sum of a generator.
    pub fn exponent_sum(&self, name: &str) -> i64 {
        self.syllables
            .iter()
            .filter(|(n, _)| n == name)
            .map(|(_, e)| e)
            .sum()
    }
}

/// A relator together with provenance and an optional display pair: the
/// stored word equals the identity; the pair `(lhs, rhs)` retains the
/// equational form relators are usually quoted in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub word: FreeWord,
    pub tag: Option<String>,
    pub display: Option<(FreeWord, FreeWord)>,
}

impl Relator {
    pub fn new(word: FreeWord) -> Self {
        Relator {
            word: word.cyclic_reduce(),
            tag: None,
            display: None,
        }
    }

    pub fn tagged(word: FreeWord, tag: &str) -> Self {
        Relator {
            word: word.cyclic_reduce(),
            tag: Some(tag.to_string()),
            display: None,
        }
    }

    pub fn equation(lhs: FreeWord, rhs: FreeWord, tag: &str) -> Self {
        Relator {
            word: lhs.concat(&rhs.inverse()).cyclic_reduce(),
            tag: Some(tag.to_string()),
            display: Some((lhs, rhs)),
        }
    }
}

/// A finite presentation: ordered generators and cyclically reduced
/// relators, each understood to equal the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    gens: Vec<String>,
    gen_docs: BTreeMap<String, String>,
    relators: Vec<Relator>,
}

impl Presentation {
    pub fn new<S: AsRef<str>>(gens: &[S], relators: Vec<Relator>) -> Result<Self, PresentationError> {
        let mut p = Presentation::default();
        for g in gens {
            p.add_generator(g.as_ref())?;
        }
        for r in relators {
            p.add_relator(r)?;
        }
        Ok(p)
    }

    pub fn add_generator(&mut self, name: &str) -> Result<(), PresentationError> {
        if self.gens.iter().any(|g| g == name) {
            return Err(PresentationError::DuplicateGenerator(name.to_string()));
        }
        self.gens.push(name.to_string());
        Ok(())
    }

    pub fn add_relator(&mut self, r: Relator) -> Result<(), PresentationError> {
        for (n, _) in r.word.syllables() {
            if !self.gens.iter().any(|g| g == n) {
                return Err(PresentationError::UnknownGenerator(n.clone()));
            }
        }
        self.relators.push(r);
        Ok(())
    }

    pub fn set_gen_doc(&mut self, name: &str, doc: &str) {
        self.gen_docs.insert(name.to_string(), doc.to_string());
    }

    pub fn gen_doc(&self, name: &str) -> Option<&str> {
        self.gen_docs.get(name).map(|s| s.as_str())
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn relator_by_tag(&self, tag: &str) -> Option<&Relator> {
        self.relators.iter().find(|r| r.tag.as_deref() == Some(tag))
    }

    /// Plain text form `< g1, g2, ... | w1, w2, ... >`.
    pub fn to_plain_text(&self) -> String {
        let rels: Vec<String> = self.relators.iter().map(|r| r.word.to_text()).collect();
        format!("< {} | {} >", self.gens.join(", "), rels.join(", "))
    }

    /// Line-oriented machine format with `gen`, `rel`, `tag` records.
    /// Generator documentation strings appear as comments.
    pub fn to_machine_format(&self) -> String {
        let mut out = String::new();
        for g in &self.gens {
            match self.gen_docs.get(g) {
                Some(doc) => out.push_str(&format!("gen {g} # {doc}\n")),
                None => out.push_str(&format!("gen {g}\n")),
            }
        }
        for r in &self.relators {
            out.push_str(&format!("rel {}\n", r.word.to_text()));
            if let Some(tag) = &r.tag {
                out.push_str(&format!("tag {tag}\n"));
            }
        }
        out
    }

    /// GAP script text defining the presented group as `g`.
    pub fn to_gap(&self) -> String {
        let quoted: Vec<String> = self.gens.iter().map(|g| format!("\"{g}\"")).collect();
        let mut out = String::new();
        out.push_str(&format!("f := FreeGroup( {} );;\n", quoted.join(", ")));
        out.push_str("AssignGeneratorVariables( f );;\n");
        let mut rels = Vec::new();
        for r in &self.relators {
            let factors: Vec<String> = r
                .word
                .syllables()
                .iter()
                .map(|(n, e)| {
                    if *e == 1 {
                        n.clone()
                    } else {
                        format!("{n}^({e})")
                    }
                })
                .collect();
            if factors.is_empty() {
                rels.push("One(f)".to_string());
            } else {
                rels.push(factors.join("*"));
            }
        }
        out.push_str(&format!("rels := [ {} ];;\n", rels.join(", ")));
        out.push_str("g := f / rels;;\n");
        out
    }

    /// Parses the plain format `< g1, g2 | w1, w2 >`.
    pub fn parse_plain(text: &str) -> Result<Self, PresentationError> {
        let t = text.trim();
        let t = t
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .ok_or_else(|| PresentationError::Parse("expected `< ... | ... >`".into()))?;
        let (gens_part, rels_part) = t
            .split_once('|')
            .ok_or_else(|| PresentationError::Parse("expected `|` separator".into()))?;
        let mut p = Presentation::default();
        for g in gens_part.split(',') {
            let g = g.trim();
            if !g.is_empty() {
                p.add_generator(g)?;
            }
        }
        for w in rels_part.split(',') {
            let w = w.trim();
            if !w.is_empty() {
                p.add_relator(Relator::new(FreeWord::parse(w)?))?;
            }
        }
        Ok(p)
    }

    /// Parses the machine format emitted by [`to_machine_format`].
    ///
    /// [`to_machine_format`]: Presentation::to_machine_format
    pub fn parse_machine(text: &str) -> Result<Self, PresentationError> {
        let mut p = Presentation::default();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gen ") {
                p.add_generator(rest.trim())?;
            } else if let Some(rest) = line.strip_prefix("rel ") {
                p.add_relator(Relator::new(FreeWord::parse(rest.trim())?))?;
            } else if line == "rel" {
                p.add_relator(Relator::new(FreeWord::empty()))?;
            } else if let Some(rest) = line.strip_prefix("tag ") {
                match p.relators.last_mut() {
                    Some(r) => r.tag = Some(rest.trim().to_string()),
                    None => {
                        return Err(PresentationError::Parse(
                            "tag record before any rel".into(),
                        ))
                    }
                }
            } else {
                return Err(PresentationError::Parse(format!(
                    "unknown record `{line}`"
                )));
            }
        }
        Ok(p)
    }

    /// Invariant factors of the abelianization: torsion divisors greater
    /// than one in divisibility order, then one `0` per free factor.
    pub fn abelianization_invariants(&self) -> Vec<i64> {
        let rows = self.relators.len();
        let cols = self.gens.len();
        let mut m = vec![vec![0i128; cols]; rows];
        for (i, r) in self.relators.iter().enumerate() {
            for (j, g) in self.gens.iter().enumerate() {
                m[i][j] = r.word.exponent_sum(g) as i128;
            }
        }
        let divisors = smith_divisors(m, rows, cols);
        let rank = divisors.iter().filter(|&&d| d != 0).count();
        let mut out: Vec<i64> = divisors
            .iter()
            .filter(|&&d| d > 1)
            .map(|&d| d as i64)
            .collect();
        out.extend(std::iter::repeat_n(0i64, cols - rank));
        out
    }

    /// Bounded Todd-Coxeter coset enumeration over the trivial subgroup:
    /// returns the group order if it completes within `max_cosets` live
    /// cosets. A cap overflow is inconclusive, not a proof of infinity.
    pub fn coset_enumeration(&self, max_cosets: usize) -> Result<usize, PresentationError> {
        todd_coxeter(self, max_cosets)
    }
}

/// Artin presentation of a Coxeter graph: one relator
/// `prod(a, b, m) = prod(b, a, m)` per unordered generator pair, with
/// `prod` the alternating product of length `m`. An absent edge means
/// `m = 2`, i.e. a commutation relator.
pub fn artin_presentation(graph: &CoxeterGraph) -> Presentation {
    let mut p = Presentation::default();
    for name in graph.vertex_names() {
        p.add_generator(name).expect("graph names are unique");
    }
    let l = graph.rank();
    for i in 0..l {
        for j in i + 1..l {
            let m = graph.label(i, j);
            let a = graph.vertex_name(i);
            let b = graph.vertex_name(j);
            let lhs = alternating_product(a, b, m);
            let rhs = alternating_product(b, a, m);
            let tag = format!("artin:{a}:{b}");
            p.add_relator(Relator::equation(lhs, rhs, &tag))
                .expect("generators declared above");
        }
    }
    p
}

/// `prod(a, b, m)`: `(ab)^(m/2)` for even `m`, `(ab)^((m-1)/2) a` for odd.
pub fn alternating_product(a: &str, b: &str, m: u32) -> FreeWord {
    let mut w = FreeWord::empty();
    for k in 0..m {
        w.push(if k % 2 == 0 { a } else { b }, 1);
    }
    w
}

/// Data describing a group extension `1 -> K -> G -> H -> 1` from which a
/// presentation of `G` is composed: presentations of `K` and `H`, a lift
/// name for every `H`-generator, for every `H`-relator `r` a word `w_r`
/// over the `K`-generators equal to the lifted relator, and for every pair
/// `(lifted generator, K-generator)` a word `v(x, y)` over the
/// `K`-generators equal to the conjugate.
#[derive(Debug, Clone)]
pub struct ExtensionData {
    pub kernel: Presentation,
    pub quotient: Presentation,
    /// `H`-generator name -> lift name in `G`.
    pub lift: BTreeMap<String, String>,
    /// One word over `S_K` per `H`-relator, in relator order.
    pub relator_images: Vec<FreeWord>,
    /// `(H-generator, K-generator) -> v(x, y)` over `S_K`.
    pub conjugates: BTreeMap<(String, String), FreeWord>,
}

/// Composes a presentation of the middle group of an extension:
/// generators are the lifted `H`-generators plus the `K`-generators;
/// relators are `lift(r) w_r^{-1}` (R1), `x y x^{-1} v(x,y)^{-1}` (R2),
/// and the `K`-relators.
pub fn compose_extension(data: &ExtensionData) -> Result<Presentation, PresentationError> {
    let mut p = Presentation::default();
    let mut lifted_names = Vec::new();
    for x in data.quotient.generators() {
        let lifted = data
            .lift
            .get(x)
            .ok_or_else(|| PresentationError::MissingDatum(format!("lift of `{x}`")))?;
        p.add_generator(lifted)?;
        lifted_names.push(lifted.clone());
    }
    for y in data.kernel.generators() {
        p.add_generator(y)
            .map_err(|_| PresentationError::NameCollision(y.clone()))?;
    }

    let check_over_kernel = |w: &FreeWord, what: &str| -> Result<(), PresentationError> {
        for (n, _) in w.syllables() {
            if !data.kernel.generators().iter().any(|g| g == n) {
                return Err(PresentationError::MissingDatum(format!(
                    "{what} mentions `{n}` which is not a kernel generator"
                )));
            }
        }
        Ok(())
    };

    // R1: lifted H-relators rewritten into the kernel.
    if data.relator_images.len() != data.quotient.relators().len() {
        return Err(PresentationError::MissingDatum(format!(
            "expected {} relator images, got {}",
            data.quotient.relators().len(),
            data.relator_images.len()
        )));
    }
    for (r, w) in data.quotient.relators().iter().zip(&data.relator_images) {
        check_over_kernel(w, "relator image")?;
        let mut lifted = FreeWord::empty();
        for (n, e) in r.word.syllables() {
            lifted.push(&data.lift[n], *e);
        }
        let tag = match &r.tag {
            Some(t) => format!("R1:{t}"),
            None => "R1".to_string(),
        };
        p.add_relator(Relator::equation(lifted, w.clone(), &tag))?;
    }

    // R2: conjugation action of the lifts on the kernel generators.
    for x in data.quotient.generators() {
        for y in data.kernel.generators() {
            let v = data
                .conjugates
                .get(&(x.clone(), y.clone()))
                .ok_or_else(|| {
                    PresentationError::MissingDatum(format!("conjugate v({x}, {y})"))
                })?;
            check_over_kernel(v, "conjugate")?;
            let mut lhs = FreeWord::gen(&data.lift[x]);
            lhs.push(y, 1);
            lhs.push(&data.lift[x], -1);
            p.add_relator(Relator::equation(lhs, v.clone(), &format!("R2:{x}:{y}")))?;
        }
    }

    // R_K: kernel relators verbatim.
    for r in data.kernel.relators() {
        let tag = match &r.tag {
            Some(t) => format!("RK:{t}"),
            None => "RK".to_string(),
        };
        p.add_relator(Relator::tagged(r.word.clone(), &tag))?;
    }
    Ok(p)
}

/// Tietze elimination of a generator: `defining_relator_index` must point
/// at a relator containing exactly one occurrence of `gen`, with exponent
/// +1 or -1. The generator is removed, every other occurrence is replaced
/// by the solved word, and relators are re-reduced.
pub fn tietze_eliminate(
    p: &Presentation,
    gen: &str,
    defining_relator_index: usize,
) -> Result<Presentation, PresentationError> {
    if !p.generators().iter().any(|g| g == gen) {
        return Err(PresentationError::UnknownGenerator(gen.to_string()));
    }
    let relator = p
        .relators()
        .get(defining_relator_index)
        .ok_or(PresentationError::BadRelatorIndex(defining_relator_index))?;

    // Locate the unique occurrence with exponent +-1 at the letter level.
    let letters = relator.word.letters();
    let occurrences: Vec<usize> = letters
        .iter()
        .enumerate()
        .filter(|(_, (n, _))| n == gen)
        .map(|(i, _)| i)
        .collect();
    if occurrences.len() != 1 {
        return Err(PresentationError::NotSolvable(
            defining_relator_index,
            gen.to_string(),
        ));
    }
    let at = occurrences[0];
    // relator = u g^s v = 1  =>  g^s = u^-1 v^-1  =>  g = (u^-1 v^-1)^s.
    let mut u = FreeWord::empty();
    for (n, s) in &letters[..at] {
        u.push(n, *s as i64);
    }
    let mut v = FreeWord::empty();
    for (n, s) in &letters[at + 1..] {
        v.push(n, *s as i64);
    }
    let sign = letters[at].1 as i64;
    let solved = u.inverse().concat(&v.inverse()).power(sign);

    let mut out = Presentation::default();
    for g in p.generators() {
        if g != gen {
            out.add_generator(g)?;
        }
    }
    for (name, doc) in &p.gen_docs {
        if name != gen {
            out.set_gen_doc(name, doc);
        }
    }
    for (i, r) in p.relators().iter().enumerate() {
        if i == defining_relator_index {
            continue;
        }
        let word = r.word.substitute(gen, &solved).cyclic_reduce();
        let display = r.display.as_ref().map(|(l, rr)| {
            (l.substitute(gen, &solved), rr.substitute(gen, &solved))
        });
        out.relators.push(Relator {
            word,
            tag: r.tag.clone(),
            display,
        });
    }
    Ok(out)
}

/// Invariant factors of an integer matrix (Smith normal form diagonal),
/// including zeros for rank deficiency. Entries use i128 to keep the
/// elimination exact at desk scale.
fn smith_divisors(mut m: Vec<Vec<i128>>, rows: usize, cols: usize) -> Vec<i128> {
    let n = rows.min(cols);
    let mut divisors = Vec::new();
    let mut top = 0usize;
    while top < n {
        // Find a non-zero pivot in the submatrix.
        let mut pivot = None;
        'search: for i in top..rows {
            for j in top..cols {
                if m[i][j] != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(top, pj);
        }
        // Reduce until the pivot divides its row and column, then clear.
        loop {
            let mut again = false;
            for i in top + 1..rows {
                while m[i][top] != 0 {
                    let q = m[i][top].div_euclid(m[top][top]);
                    for j in top..cols {
                        let sub = q * m[top][j];
                        m[i][j] -= sub;
                    }
                    if m[i][top] != 0 {
                        m.swap(top, i);
                        again = true;
                    }
                }
            }
            for j in top + 1..cols {
                while m[top][j] != 0 {
                    let q = m[top][j].div_euclid(m[top][top]);
                    for row in m.iter_mut().take(rows).skip(top) {
                        let sub = q * row[top];
                        row[j] -= sub;
                    }
                    if m[top][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(top, j);
                        }
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        divisors.push(m[top][top].abs());
        top += 1;
    }
    // Enforce the divisibility chain d1 | d2 | ... by gcd/lcm fixups.
    loop {
        let mut fixed = true;
        for i in 0..divisors.len().saturating_sub(1) {
            let (a, b) = (divisors[i], divisors[i + 1]);
            if a != 0 && b % a != 0 {
                let g = gcd(a, b);
                divisors[i] = g;
                divisors[i + 1] = a / g * b;
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }
    divisors
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Plain HLT-style Todd-Coxeter over the trivial subgroup, with a hard cap
/// on the number of cosets ever defined.
fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<usize, PresentationError> {
    let ngens = p.generators().len();
    let gen_index: HashMap<&str, usize> = p
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| (g.as_str(), i))
        .collect();
    // Column layout: 2*g for the generator, 2*g+1 for its inverse.
    let relator_cols: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| {
            r.word
                .letters()
                .into_iter()
                .map(|(n, s)| 2 * gen_index[n.as_str()] + usize::from(s < 0))
                .collect()
        })
        .collect();

    const UNDEF: usize = usize::MAX;
    let mut table: Vec<Vec<usize>> = vec![vec![UNDEF; 2 * ngens]]; // coset 0 = identity
    let mut parent: Vec<usize> = vec![0]; // union-find for coincidences
    let mut live = 1usize;

    fn find(parent: &mut [usize], mut c: usize) -> usize {
        while parent[c] != c {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        c
    }

    let inv_col = |d: usize| d ^ 1;

    // Merge two cosets and propagate coincidences.
    fn merge(
        table: &mut [Vec<usize>],
        parent: &mut [usize],
        live: &mut usize,
        a: usize,
        b: usize,
    ) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let ra = find(parent, a);
            let rb = find(parent, b);
            if ra == rb {
                continue;
            }
            let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[drop] = keep;
            *live -= 1;
            for d in 0..table[drop].len() {
                let t = table[drop][d];
                if t == usize::MAX {
                    continue;
                }
                let existing = table[keep][d];
                if existing == usize::MAX {
                    table[keep][d] = t;
                } else {
                    queue.push((existing, t));
                }
            }
        }
    }

    let mut scanned = 0usize;
    loop {
        // Scan every relator at every live coset; define new cosets as
        // needed (HLT). Repeat until every scan closes without changes and
        // the table is complete.
        let mut changed = false;
        let mut c = 0;
        while c < table.len() {
            if find(&mut parent, c) != c {
                c += 1;
                continue;
            }
            for rel in &relator_cols {
                // Forward scan from c.
                let mut cur = c;
                for (k, &d) in rel.iter().enumerate() {
                    let cur_root = find(&mut parent, cur);
                    let next = table[cur_root][d];
                    let next = if next == UNDEF {
                        if k + 1 == rel.len() {
                            // Last letter must close back to c.
                            let target = find(&mut parent, c);
                            table[cur_root][d] = target;
                            let back = table[target][inv_col(d)];
                            if back == UNDEF {
                                table[target][inv_col(d)] = cur_root;
                            } else if find(&mut parent, back) != cur_root {
                                merge(&mut table, &mut parent, &mut live, back, cur_root);
                            }
                            changed = true;
                            break;
                        }
                        if table.len() >= max_cosets {
                            return Err(PresentationError::CosetCapExceeded(max_cosets));
                        }
                        let fresh = table.len();
                        table.push(vec![UNDEF; 2 * ngens]);
                        parent.push(fresh);
                        live += 1;
                        table[cur_root][d] = fresh;
                        table[fresh][inv_col(d)] = cur_root;
                        changed = true;
                        fresh
                    } else {
                        let next = find(&mut parent, next);
                        if k + 1 == rel.len() {
                            let target = find(&mut parent, c);
                            if next != target {
                                merge(&mut table, &mut parent, &mut live, next, target);
                                changed = true;
                            }
                            break;
                        }
                        next
                    };
                    cur = next;
                }
            }
            c += 1;
            scanned += 1;
            if scanned > 50 * max_cosets {
                return Err(PresentationError::CosetCapExceeded(max_cosets));
            }
        }
        // Completeness pass: every generator action must be defined for the
        // table to witness the order (this is what forces divergence, and
        // hence a cap error, on infinite groups).
        let mut c = 0;
        while c < table.len() {
            if find(&mut parent, c) != c {
                c += 1;
                continue;
            }
            for d in 0..2 * ngens {
                if find(&mut parent, c) != c {
                    break;
                }
                if table[c][d] == UNDEF {
                    if table.len() >= max_cosets {
                        return Err(PresentationError::CosetCapExceeded(max_cosets));
                    }
                    let fresh = table.len();
                    table.push(vec![UNDEF; 2 * ngens]);
                    parent.push(fresh);
                    live += 1;
                    table[c][d] = fresh;
                    table[fresh][inv_col(d)] = c;
                    changed = true;
                }
            }
            c += 1;
        }
        if !changed {
            break;
        }
    }
    Ok(live)
}
