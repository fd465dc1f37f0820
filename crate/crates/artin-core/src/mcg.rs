//! Coxeter-graph families and relator schemas presenting mapping class
//! groups of punctured surfaces.
//!
//! For a surface of genus `g` with `r + 1` boundary components (or a
//! closed one) carrying `n` punctures, the mapping class group is the
//! quotient of the Artin group of a specific graph by a short list of
//! relations between powers of fundamental elements of parabolic
//! subgroups. This module builds the graphs, instantiates the relation
//! schemas that apply to given parameters, and audits every fundamental
//! element argument against the finite type it must classify into.
//!
//! Vertex roles follow the generator naming used for the surface twists:
//! `x_i`, `y_i`, `z` are Dehn twists, `u_i` are twists along
//! boundary-parallel curves, and `v_i` are braid twists permuting
//! punctures.

use std::fmt;

use crate::coxeter::{CoxeterGraph, StandardType};
use crate::garside::{delta_word_of, WordError};
use crate::presentation::{artin_presentation, FreeWord, Presentation, Relator};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum McgError {
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// The full mapping class group: punctures may be permuted.
    Full,
    /// The pure mapping class group: punctures are fixed pointwise.
    Pure,
}

/// Parameters selecting a punctured mapping class group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceParams {
    /// Genus, at least 1.
    pub genus: u32,
    /// Boundary parameter `r`: bounded surfaces have `r + 1` boundary
    /// components; closed surfaces require `r = 0`.
    pub boundary: u32,
    /// Puncture count `n >= 0`.
    pub punctures: u32,
    pub flavor: Flavor,
    /// True for the closed-surface families.
    pub closed: bool,
}

impl SurfaceParams {
    pub fn new(
        genus: u32,
        boundary: u32,
        punctures: u32,
        flavor: Flavor,
        closed: bool,
    ) -> Result<Self, McgError> {
        let p = SurfaceParams {
            genus,
            boundary,
            punctures,
            flavor,
            closed,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), McgError> {
        if self.genus < 1 {
            return Err(McgError::Unsupported("genus must be at least 1".into()));
        }
        if self.closed && self.boundary != 0 {
            return Err(McgError::Unsupported(
                "closed surfaces require r = 0".into(),
            ));
        }
        if self.closed && self.flavor == Flavor::Pure {
            return Err(McgError::Unsupported(
                "pure mapping class groups of closed surfaces are not covered".into(),
            ));
        }
        Ok(())
    }
}

/// Role of a vertex in a graph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    X(u32),
    Y(u32),
    Z,
    U(u32),
    V(u32),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X(i) => write!(f, "x{i}"),
            Role::Y(i) => write!(f, "y{i}"),
            Role::Z => write!(f, "z"),
            Role::U(i) => write!(f, "u{i}"),
            Role::V(i) => write!(f, "v{i}"),
        }
    }
}

/// A family graph together with the role of every vertex.
#[derive(Debug, Clone)]
pub struct GraphFamily {
    pub graph: CoxeterGraph,
    pub roles: Vec<Role>,
}

impl GraphFamily {
    pub fn role_of(&self, name: &str) -> Option<Role> {
        let i = self.graph.vertex_index(name).ok()?;
        Some(self.roles[i])
    }
}

fn x(i: u32) -> String {
    format!("x{i}")
}
fn y(i: u32) -> String {
    format!("y{i}")
}
fn u(i: u32) -> String {
    format!("u{i}")
}
fn v(i: u32) -> String {
    format!("v{i}")
}

/// Builds the family graph for the given parameters.
///
/// Inventory: `x` vertices (`x0..x{r+1}` for the full flavor when `n >= 1`,
/// `x0..xr` when `n = 0`; `x0..x{n+r}` for the pure flavor), `y1..y{2g-1}`,
/// `z` when `g >= 2`, `u1..ur`, and `v1..v{n-1}` for the full flavor.
/// Every `x` vertex joins `y1`; the `y` vertices form a path; `z` joins
/// `y3`; the `v` vertices form a path attached to `x{r+1}` by the 4-labeled
/// edge. The `u` vertices are isolated by default: boundary-parallel twists
/// commute with everything listed, and no fundamental-element argument ever
/// contains one. Alternative adjacency readings can be supplied through the
/// graph text format.
pub fn build_graph(p: &SurfaceParams) -> Result<GraphFamily, McgError> {
    p.validate()?;
    let g = p.genus;
    let r = p.boundary;
    let n = p.punctures;

    let mut names: Vec<String> = Vec::new();
    let mut roles: Vec<Role> = Vec::new();
    let x_top = match p.flavor {
        Flavor::Full => {
            if n >= 1 {
                r + 1
            } else {
                r
            }
        }
        Flavor::Pure => n + r,
    };
    for i in 0..=x_top {
        names.push(x(i));
        roles.push(Role::X(i));
    }
    for i in 1..=(2 * g - 1) {
        names.push(y(i));
        roles.push(Role::Y(i));
    }
    if g >= 2 {
        names.push("z".into());
        roles.push(Role::Z);
    }
    for i in 1..=r {
        names.push(u(i));
        roles.push(Role::U(i));
    }
    let n_v = if p.flavor == Flavor::Full && n >= 2 {
        n - 1
    } else {
        0
    };
    for i in 1..=n_v {
        names.push(v(i));
        roles.push(Role::V(i));
    }

    let mut edges: Vec<(String, String, u32)> = Vec::new();
    for i in 0..=x_top {
        edges.push((x(i), y(1), 3));
    }
    for i in 1..(2 * g - 1) {
        edges.push((y(i), y(i + 1), 3));
    }
    if g >= 2 {
        edges.push(("z".into(), y(3), 3));
    }
    if n_v >= 1 {
        edges.push((x(r + 1), v(1), 4));
        for i in 1..n_v {
            edges.push((v(i), v(i + 1), 3));
        }
    }

    let refs: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
        .collect();
    let graph = CoxeterGraph::new(&names, &refs).expect("family graphs are simple");
    Ok(GraphFamily { graph, roles })
}

/// One side of a relator schema: a product of generator powers and powers
/// of fundamental elements of vertex subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Gen { name: String, exponent: i64 },
    Delta { set: Vec<String>, exponent: i64 },
}

impl Atom {
    fn gen(name: impl Into<String>) -> Atom {
        Atom::Gen {
            name: name.into(),
            exponent: 1,
        }
    }

    fn gen_pow(name: impl Into<String>, exponent: i64) -> Atom {
        Atom::Gen {
            name: name.into(),
            exponent,
        }
    }

    fn delta(set: Vec<String>, exponent: i64) -> Atom {
        Atom::Delta { set, exponent }
    }
}

/// An instantiated relator schema: identifier (base id plus indices) and
/// the two sides as atom sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaInstance {
    pub id: String,
    pub base: &'static str,
    pub lhs: Vec<Atom>,
    pub rhs: Vec<Atom>,
}

impl SchemaInstance {
    fn new(id: String, base: &'static str, lhs: Vec<Atom>, rhs: Vec<Atom>) -> Self {
        SchemaInstance { id, base, lhs, rhs }
    }

    /// Every fundamental-element argument set on either side.
    pub fn delta_sets(&self) -> Vec<&Vec<String>> {
        self.lhs
            .iter()
            .chain(self.rhs.iter())
            .filter_map(|a| match a {
                Atom::Delta { set, .. } => Some(set),
                _ => None,
            })
            .collect()
    }

    /// Renders both sides to words over the family graph, expanding each
    /// `Delta` through the deterministic fundamental-element word.
    pub fn render(&self, graph: &CoxeterGraph) -> Result<(FreeWord, FreeWord), McgError> {
        Ok((
            render_atoms(&self.lhs, graph)?,
            render_atoms(&self.rhs, graph)?,
        ))
    }
}

fn render_atoms(atoms: &[Atom], graph: &CoxeterGraph) -> Result<FreeWord, McgError> {
    let mut out = FreeWord::empty();
    for atom in atoms {
        match atom {
            Atom::Gen { name, exponent } => out.push(name, *exponent),
            Atom::Delta { set, exponent } => {
                if set.is_empty() {
                    continue; // Delta of the empty set is the identity
                }
                let d = delta_word_of(graph, set)?;
                let sylls: Vec<(String, i64)> = d
                    .syllables()
                    .iter()
                    .map(|&(i, e)| (graph.vertex_name(i).to_string(), e))
                    .collect();
                let base = FreeWord::from_syllables(&sylls);
                out = out.concat(&base.power(*exponent));
            }
        }
    }
    Ok(out)
}

/// Instantiates exactly the relator schemas whose parameter guards hold.
/// Guard-inconsistent parameters yield an empty list, not an error; the
/// only rejected configuration is the unsupported pure + closed one.
pub fn emit_relators(p: &SurfaceParams) -> Result<Vec<SchemaInstance>, McgError> {
    p.validate()?;
    let g = p.genus;
    let r = p.boundary;
    let n = p.punctures;

    let yz_small: Vec<String> = vec![y(1), y(2), y(3), "z".into()];
    let yz_large: Vec<String> = vec![y(1), y(2), y(3), y(4), y(5), "z".into()];
    let with_x0 = |set: &[String]| {
        let mut s = vec![x(0)];
        s.extend(set.iter().cloned());
        s
    };
    // {z, y2, .., y{2g-1}}: the D-shaped set of the closed-surface relation.
    let d_tail: Vec<String> = std::iter::once("z".to_string())
        .chain((2..=(2 * g - 1)).map(y))
        .collect();
    // {x1, v1, .., v{n-1}}: the B-shaped set of the closed-surface relations.
    let b_fan: Vec<String> = std::iter::once(x(1))
        .chain((1..n.max(1)).map(v))
        .collect();

    // The commutation conjugator around x_i by Delta(x_{i+1}, x_j, y_1).
    let conj = |i: u32, j: u32| -> Vec<Atom> {
        let set = vec![x(i + 1), x(j), y(1)];
        vec![
            Atom::delta(set.clone(), -1),
            Atom::gen(x(i)),
            Atom::delta(set, 1),
        ]
    };
    let commutation = |id: String, base: &'static str, mover: String, i: u32, j: u32| {
        let c = conj(i, j);
        let mut lhs = vec![Atom::gen(mover.clone())];
        lhs.extend(c.clone());
        let mut rhs = c;
        rhs.push(Atom::gen(mover));
        SchemaInstance::new(id, base, lhs, rhs)
    };

    let mut out = Vec::new();
    match (p.flavor, p.closed) {
        (Flavor::Full, false) => {
            if g >= 2 {
                out.push(SchemaInstance::new(
                    "R1".into(),
                    "R1",
                    vec![Atom::delta(yz_small.clone(), 4)],
                    vec![Atom::delta(with_x0(&yz_small), 2)],
                ));
            }
            if g >= 3 {
                out.push(SchemaInstance::new(
                    "R2".into(),
                    "R2",
                    vec![Atom::delta(yz_large.clone(), 2)],
                    vec![Atom::delta(with_x0(&yz_large), 1)],
                ));
            }
            // With no punctures the x range stops at x_r, so the
            // commutation schemas clamp their top index accordingly.
            let top = if n >= 1 { r } else { r.saturating_sub(1) };
            if r >= 1 {
                for i in 0..=top {
                    for j in 0..i {
                        for k in 0..j {
                            out.push(commutation(format!("R3({k},{j},{i})"), "R3", x(k), i, j));
                        }
                        if g >= 2 {
                            out.push(commutation(format!("R4({j},{i})"), "R4", y(2), i, j));
                        }
                    }
                }
            }
            if g >= 2 && r >= 1 {
                out.push(SchemaInstance::new(
                    "R5".into(),
                    "R5",
                    vec![Atom::gen(u(1))],
                    vec![
                        Atom::delta(with_x0(&with_set(x(1), &yz_small)), 1),
                        Atom::delta(with_set(x(1), &yz_small), -2),
                    ],
                ));
                for i in 1..r {
                    out.push(SchemaInstance::new(
                        format!("R6({i})"),
                        "R6",
                        vec![Atom::gen(u(i + 1))],
                        vec![
                            Atom::delta(pair_set(x(i), x(i + 1), &yz_small), 1),
                            Atom::delta(with_set(x(i + 1), &yz_small), -2),
                            Atom::delta(vec![x(0), x(i + 1), y(1)], 2),
                            Atom::delta(vec![x(0), x(i), x(i + 1), y(1)], -1),
                        ],
                    ));
                }
            }
            if n >= 2 {
                out.push(SchemaInstance::new(
                    "R7".into(),
                    "R7",
                    vec![Atom::delta(vec![x(r), x(r + 1), y(1), v(1)], 1)],
                    vec![Atom::delta(vec![x(r + 1), y(1), v(1)], 2)],
                ));
            }
            if n >= 1 && g >= 2 {
                if r == 0 {
                    out.push(SchemaInstance::new(
                        "R8a".into(),
                        "R8a",
                        vec![Atom::delta(with_x0(&with_set(x(1), &yz_small)), 1)],
                        vec![Atom::delta(with_set(x(1), &yz_small), 2)],
                    ));
                } else {
                    out.push(SchemaInstance::new(
                        "R8b".into(),
                        "R8b",
                        vec![
                            Atom::delta(pair_set(x(r), x(r + 1), &yz_small), 1),
                            Atom::delta(with_set(x(r + 1), &yz_small), -2),
                        ],
                        vec![
                            Atom::delta(vec![x(0), x(r), x(r + 1), y(1)], 1),
                            Atom::delta(vec![x(0), x(r + 1), y(1)], -2),
                        ],
                    ));
                }
            }
        }
        (Flavor::Full, true) if n == 0 => {
            if g >= 2 {
                out.push(SchemaInstance::new(
                    "M1".into(),
                    "M1",
                    vec![Atom::delta(yz_small.clone(), 4)],
                    vec![Atom::delta(with_x0(&yz_small), 2)],
                ));
            }
            if g >= 3 {
                out.push(SchemaInstance::new(
                    "M2".into(),
                    "M2",
                    vec![Atom::delta(yz_large.clone(), 2)],
                    vec![Atom::delta(with_x0(&yz_large), 1)],
                ));
            }
            if g == 1 {
                let mut lhs = Vec::new();
                for _ in 0..6 {
                    lhs.push(Atom::gen(x(0)));
                    lhs.push(Atom::gen(y(1)));
                }
                out.push(SchemaInstance::new("M3".into(), "M3", lhs, vec![]));
            } else {
                out.push(SchemaInstance::new(
                    "M3".into(),
                    "M3",
                    vec![Atom::gen_pow(x(0), 2 * g as i64 - 2)],
                    vec![Atom::delta(d_tail.clone(), 2)],
                ));
            }
        }
        (Flavor::Full, true) => {
            if g >= 2 {
                out.push(SchemaInstance::new(
                    "R1".into(),
                    "R1",
                    vec![Atom::delta(yz_small.clone(), 4)],
                    vec![Atom::delta(with_x0(&yz_small), 2)],
                ));
            }
            if g >= 3 {
                out.push(SchemaInstance::new(
                    "R2".into(),
                    "R2",
                    vec![Atom::delta(yz_large.clone(), 2)],
                    vec![Atom::delta(with_x0(&yz_large), 1)],
                ));
            }
            if n >= 2 {
                out.push(SchemaInstance::new(
                    "R7".into(),
                    "R7",
                    vec![Atom::delta(vec![x(0), x(1), y(1), v(1)], 1)],
                    vec![Atom::delta(vec![x(1), y(1), v(1)], 2)],
                ));
            }
            if g >= 2 {
                out.push(SchemaInstance::new(
                    "R8a".into(),
                    "R8a",
                    vec![Atom::delta(with_x0(&with_set(x(1), &yz_small)), 1)],
                    vec![Atom::delta(with_set(x(1), &yz_small), 2)],
                ));
                out.push(SchemaInstance::new(
                    "R9a".into(),
                    "R9a",
                    vec![
                        Atom::gen_pow(x(0), 2 * g as i64 - n as i64 - 2),
                        Atom::delta(b_fan.clone(), 1),
                    ],
                    vec![Atom::delta(d_tail.clone(), 2)],
                ));
            } else {
                out.push(SchemaInstance::new(
                    "R9b".into(),
                    "R9b",
                    vec![Atom::gen_pow(x(0), n as i64)],
                    vec![Atom::delta(b_fan.clone(), 1)],
                ));
                out.push(SchemaInstance::new(
                    "R9c".into(),
                    "R9c",
                    vec![Atom::delta(vec![x(0), y(1)], 4)],
                    vec![Atom::delta((1..n.max(1)).map(v).collect(), 2)],
                ));
            }
        }
        (Flavor::Pure, false) => {
            if g >= 2 {
                out.push(SchemaInstance::new(
                    "PR1".into(),
                    "PR1",
                    vec![Atom::delta(yz_small.clone(), 4)],
                    vec![Atom::delta(with_x0(&yz_small), 2)],
                ));
            }
            if g >= 3 {
                out.push(SchemaInstance::new(
                    "PR2".into(),
                    "PR2",
                    vec![Atom::delta(yz_large.clone(), 2)],
                    vec![Atom::delta(with_x0(&yz_large), 1)],
                ));
            }
            if r + n >= 1 {
                let top = r + n - 1;
                for i in 0..=top {
                    for j in 0..i {
                        for k in 0..j {
                            out.push(commutation(format!("PR3({k},{j},{i})"), "PR3", x(k), i, j));
                        }
                        if g >= 2 {
                            out.push(commutation(format!("PR4({j},{i})"), "PR4", y(2), i, j));
                        }
                    }
                }
            }
            if g >= 2 && r == 0 && n >= 1 {
                out.push(SchemaInstance::new(
                    "PR5".into(),
                    "PR5",
                    vec![Atom::delta(with_x0(&with_set(x(1), &yz_small)), 1)],
                    vec![Atom::delta(with_set(x(1), &yz_small), 2)],
                ));
                for i in 1..n {
                    out.push(SchemaInstance::new(
                        format!("PR6({i})"),
                        "PR6",
                        vec![
                            Atom::delta(pair_set(x(i), x(i + 1), &yz_small), 1),
                            Atom::delta(with_set(x(i + 1), &yz_small), -2),
                        ],
                        vec![
                            Atom::delta(vec![x(0), x(i), x(i + 1), y(1)], 1),
                            Atom::delta(vec![x(0), x(i + 1), y(1)], -2),
                        ],
                    ));
                }
            }
            if g >= 2 && r >= 1 {
                out.push(SchemaInstance::new(
                    "PR5a".into(),
                    "PR5a",
                    vec![Atom::gen(u(1))],
                    vec![
                        Atom::delta(with_x0(&with_set(x(1), &yz_small)), 1),
                        Atom::delta(with_set(x(1), &yz_small), -2),
                    ],
                ));
                for i in 1..r {
                    out.push(SchemaInstance::new(
                        format!("PR6a({i})"),
                        "PR6a",
                        vec![Atom::gen(u(i + 1))],
                        vec![
                            Atom::delta(pair_set(x(i), x(i + 1), &yz_small), 1),
                            Atom::delta(with_set(x(i + 1), &yz_small), -2),
                            Atom::delta(vec![x(0), x(i + 1), y(1)], 2),
                            Atom::delta(vec![x(0), x(i), x(i + 1), y(1)], -1),
                        ],
                    ));
                }
                for i in r..(n + r) {
                    out.push(SchemaInstance::new(
                        format!("PR6b({i})"),
                        "PR6b",
                        vec![
                            Atom::delta(pair_set(x(i), x(i + 1), &yz_small), 1),
                            Atom::delta(with_set(x(i + 1), &yz_small), -2),
                        ],
                        vec![
                            Atom::delta(vec![x(0), x(i), x(i + 1), y(1)], 1),
                            Atom::delta(vec![x(0), x(i + 1), y(1)], -2),
                        ],
                    ));
                }
            }
        }
        (Flavor::Pure, true) => unreachable!("rejected by validate"),
    }
    Ok(out)
}

fn with_set(extra: String, base: &[String]) -> Vec<String> {
    let mut set = vec![extra];
    set.extend(base.iter().cloned());
    set
}

fn pair_set(a: String, b: String, base: &[String]) -> Vec<String> {
    let mut set = vec![a, b];
    set.extend(base.iter().cloned());
    set
}

/// Full presentation: the Artin presentation of the family graph plus the
/// instantiated schemas as relators. Generator metadata records which
/// surface twist each vertex names.
pub fn presentation_of(p: &SurfaceParams) -> Result<Presentation, McgError> {
    let fam = build_graph(p)?;
    let mut pres = artin_presentation(&fam.graph);
    for (idx, name) in fam.graph.vertex_names().iter().enumerate() {
        let doc = match fam.roles[idx] {
            Role::X(i) => format!("Dehn twist a_{i}"),
            Role::Y(i) => format!("Dehn twist b_{i}"),
            Role::Z => "Dehn twist c".to_string(),
            Role::U(i) => format!("Dehn twist d_{i} (boundary-parallel)"),
            Role::V(i) => format!("braid twist tau_{i}"),
        };
        pres.set_gen_doc(name, &doc);
    }
    for inst in emit_relators(p)? {
        let (lhs, rhs) = inst.render(&fam.graph)?;
        pres.add_relator(Relator::equation(lhs, rhs, &inst.id))
            .expect("schema relators mention declared vertices");
    }
    Ok(pres)
}

/// Classifies the parabolic subgroup induced by a vertex subset of a
/// family graph.
pub fn classify_parabolic(
    fam: &GraphFamily,
    subset: &[String],
) -> Result<(StandardType, Vec<usize>), McgError> {
    let mut indices = Vec::new();
    for name in subset {
        indices.push(
            fam.graph
                .vertex_index(name)
                .map_err(WordError::Graph)?,
        );
    }
    let (sub, _) = fam.graph.induced_subgraph(&indices);
    sub.classify_finite_type()
        .ok_or_else(|| McgError::Unsupported(format!("subset {subset:?} is not finite type")))
}

/// One audit row: a fundamental-element argument set of a schema instance,
/// the type it is expected to have, and what the classifier found.
#[derive(Debug, Clone)]
pub struct WellformedEntry {
    pub schema_id: String,
    pub set: Vec<String>,
    pub expected: String,
    pub classified: Option<String>,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct WellformedReport {
    pub entries: Vec<WellformedEntry>,
}

impl WellformedReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> Vec<&WellformedEntry> {
        self.entries.iter().filter(|e| !e.ok).collect()
    }
}

/// Expected finite type of a fundamental-element argument set, computed
/// from the roles of its vertices rather than by running the classifier:
/// leaves on `y1` plus an attached `y`-path give the A/D shapes, a `v`
/// path behind the 4-edge gives the B shapes. Low ranks collapse
/// (D3 = A3, B1 = A1).
fn expected_type_of_set(fam: &GraphFamily, set: &[String]) -> Option<String> {
    let roles: Vec<Role> = set.iter().map(|n| fam.role_of(n)).collect::<Option<_>>()?;
    let n_x = roles.iter().filter(|r| matches!(r, Role::X(_))).count();
    let n_v = roles.iter().filter(|r| matches!(r, Role::V(_))).count();
    let has_z = roles.iter().any(|r| matches!(r, Role::Z));
    let has_y1 = roles.contains(&Role::Y(1));
    let n_y = roles.iter().filter(|r| matches!(r, Role::Y(_))).count();
    let total = set.len();
    if roles.iter().any(|r| matches!(r, Role::U(_))) {
        return None; // u vertices never occur inside fundamental elements
    }
    let name = |fam_tag: char, rank: usize| -> String {
        match (fam_tag, rank) {
            ('D', 3) => "A3".to_string(),
            ('B', 1) => "A1".to_string(),
            (t, r) => format!("{t}{r}"),
        }
    };
    if n_v > 0 {
        return if has_y1 || n_x == 1 {
            // {x_r, x_{r+1}, y1, v1}, {x_{r+1}, y1, v1}, or the closed
            // fan {x1, v1, .., v_{n-1}}: a path ending in the 4-edge.
            Some(name('B', total))
        } else if n_x == 0 {
            // {v1, .., v_{n-1}}: plain path.
            Some(name('A', total))
        } else {
            None
        };
    }
    if has_z && !has_y1 {
        // {z, y2, .., y_{2g-1}}: two leaves z, y2 on y3.
        return Some(name('D', total));
    }
    let y_max = roles
        .iter()
        .filter_map(|r| match r {
            Role::Y(i) => Some(*i),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    match n_x {
        0 | 1 => {
            if has_z && has_y1 && y_max > 3 {
                // {(x0,) y1 .. y5, z}: branch at y3.
                Some(format!("E{total}"))
            } else {
                Some(name('A', total))
            }
        }
        2 => {
            if n_y + usize::from(has_z) >= 2 {
                Some(name('D', total))
            } else {
                Some(name('A', total))
            }
        }
        3 => Some(name('D', total)),
        _ => None,
    }
}

/// Audits every instantiated schema at the given parameters: each
/// fundamental-element argument must induce a connected subgraph of the
/// expected finite type.
pub fn schema_wellformed(p: &SurfaceParams) -> Result<WellformedReport, McgError> {
    let fam = build_graph(p)?;
    let mut entries = Vec::new();
    for inst in emit_relators(p)? {
        for set in inst.delta_sets() {
            if set.is_empty() {
                continue;
            }
            let expected = expected_type_of_set(&fam, set);
            let classified = classify_parabolic(&fam, set)
                .ok()
                .map(|(ty, _)| ty.to_string());
            let ok = matches!((&expected, &classified), (Some(e), Some(c)) if e == c);
            entries.push(WellformedEntry {
                schema_id: inst.id.clone(),
                set: set.clone(),
                expected: expected.unwrap_or_else(|| "?".into()),
                classified,
                ok,
            });
        }
    }
    Ok(WellformedReport { entries })
}

#[cfg(test)]
mod tests;
