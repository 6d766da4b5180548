//! Parametrized molecular graph families as explicit graphs, with the
//! vertex/edge partition counts each construction must satisfy.
//!
//! Labeling conventions (all 0-based, so the 1-based reference adjacency
//! constructions match after an index shift):
//!
//! * tube lattices are row-major: vertex `id = row·width + column`;
//! * `TUC4C8(R)` groups vertices in squares of four, `id = 4·square + corner`;
//! * dendrimers are labeled in BFS order, children of a vertex contiguous;
//! * circumcoronene vertices are hexagon corners on an integer lattice,
//!   numbered in lexicographic coordinate order;
//! * Mycielski families follow [`Graph::mycielski`]: originals, shadows, apex.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError};

/// The graph families under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Tuc4c8s,
    Tuc4c8r,
    Tuc4,
    Tuhc6,
    Tuvc6,
    Dendrimer,
    Circumcoronene,
    MycielskiCycle,
    MycielskiPath,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Tuc4c8s,
        Family::Tuc4c8r,
        Family::Tuc4,
        Family::Tuhc6,
        Family::Tuvc6,
        Family::Dendrimer,
        Family::Circumcoronene,
        Family::MycielskiCycle,
        Family::MycielskiPath,
    ];

    /// Lowercase CLI token.
    pub fn token(&self) -> &'static str {
        match self {
            Family::Tuc4c8s => "tuc4c8s",
            Family::Tuc4c8r => "tuc4c8r",
            Family::Tuc4 => "tuc4",
            Family::Tuhc6 => "tuhc6",
            Family::Tuvc6 => "tuvc6",
            Family::Dendrimer => "dendrimer",
            Family::Circumcoronene => "circumcoronene",
            Family::MycielskiCycle => "mcycle",
            Family::MycielskiPath => "mpath",
        }
    }

    pub fn from_token(token: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.token() == token)
    }

    /// True for the families the limiting `Var − CS → 0` statement covers:
    /// the five nanotube lattices and circumcoronene.
    pub fn in_conjecture_scope(&self) -> bool {
        !matches!(self, Family::Dendrimer | Family::MycielskiCycle | Family::MycielskiPath)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A family plus its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    Tuc4c8s { p: u32, q: u32 },
    Tuc4c8r { p: u32, q: u32 },
    Tuc4 { p: u32, q: u32 },
    Tuhc6 { p: u32, q: u32 },
    Tuvc6 { p: u32, q: u32 },
    Dendrimer { k: u32, d: u32 },
    Circumcoronene { k: u32 },
    MycielskiCycle { n: u32 },
    MycielskiPath { n: u32 },
}

/// Parameter slots for building a [`FamilySpec`] from named values
/// (CLI flags, config files).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParamValues {
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub k: Option<u32>,
    pub d: Option<u32>,
    pub n: Option<u32>,
}

impl FamilySpec {
    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Tuc4c8s { .. } => Family::Tuc4c8s,
            FamilySpec::Tuc4c8r { .. } => Family::Tuc4c8r,
            FamilySpec::Tuc4 { .. } => Family::Tuc4,
            FamilySpec::Tuhc6 { .. } => Family::Tuhc6,
            FamilySpec::Tuvc6 { .. } => Family::Tuvc6,
            FamilySpec::Dendrimer { .. } => Family::Dendrimer,
            FamilySpec::Circumcoronene { .. } => Family::Circumcoronene,
            FamilySpec::MycielskiCycle { .. } => Family::MycielskiCycle,
            FamilySpec::MycielskiPath { .. } => Family::MycielskiPath,
        }
    }

    /// Builds a spec from named parameters, rejecting missing or extraneous
    /// ones. Validity floors are checked separately by [`FamilySpec::validate`]
    /// (and by everything that consumes a spec).
    pub fn from_params(family: Family, params: ParamValues) -> Result<FamilySpec, GenerateError> {
        let missing = |name| GenerateError::InvalidParams { family, reason: name };
        let take = |slot: Option<u32>, name: &'static str| slot.ok_or(missing(name));
        let spec = match family {
            Family::Tuc4c8s => FamilySpec::Tuc4c8s {
                p: take(params.p, "missing parameter p")?,
                q: take(params.q, "missing parameter q")?,
            },
            Family::Tuc4c8r => FamilySpec::Tuc4c8r {
                p: take(params.p, "missing parameter p")?,
                q: take(params.q, "missing parameter q")?,
            },
            Family::Tuc4 => FamilySpec::Tuc4 {
                p: take(params.p, "missing parameter p")?,
                q: take(params.q, "missing parameter q")?,
            },
            Family::Tuhc6 => FamilySpec::Tuhc6 {
                p: take(params.p, "missing parameter p")?,
                q: take(params.q, "missing parameter q")?,
            },
            Family::Tuvc6 => FamilySpec::Tuvc6 {
                p: take(params.p, "missing parameter p")?,
                q: take(params.q, "missing parameter q")?,
            },
            Family::Dendrimer => FamilySpec::Dendrimer {
                k: take(params.k, "missing parameter k")?,
                d: take(params.d, "missing parameter d")?,
            },
            Family::Circumcoronene => {
                FamilySpec::Circumcoronene { k: take(params.k, "missing parameter k")? }
            }
            Family::MycielskiCycle => {
                FamilySpec::MycielskiCycle { n: take(params.n, "missing parameter n")? }
            }
            Family::MycielskiPath => {
                FamilySpec::MycielskiPath { n: take(params.n, "missing parameter n")? }
            }
        };
        let expected = spec.param_values();
        for (given, allowed, name) in [
            (params.p, expected.p.is_some(), "unexpected parameter p"),
            (params.q, expected.q.is_some(), "unexpected parameter q"),
            (params.k, expected.k.is_some(), "unexpected parameter k"),
            (params.d, expected.d.is_some(), "unexpected parameter d"),
            (params.n, expected.n.is_some(), "unexpected parameter n"),
        ] {
            if given.is_some() && !allowed {
                return Err(GenerateError::InvalidParams { family, reason: name });
            }
        }
        Ok(spec)
    }

    /// The parameters by slot name.
    pub fn param_values(&self) -> ParamValues {
        let mut v = ParamValues::default();
        match *self {
            FamilySpec::Tuc4c8s { p, q }
            | FamilySpec::Tuc4c8r { p, q }
            | FamilySpec::Tuc4 { p, q }
            | FamilySpec::Tuhc6 { p, q }
            | FamilySpec::Tuvc6 { p, q } => {
                v.p = Some(p);
                v.q = Some(q);
            }
            FamilySpec::Dendrimer { k, d } => {
                v.k = Some(k);
                v.d = Some(d);
            }
            FamilySpec::Circumcoronene { k } => v.k = Some(k),
            FamilySpec::MycielskiCycle { n } | FamilySpec::MycielskiPath { n } => v.n = Some(n),
        }
        v
    }

    /// Checks the validity floors: the smallest parameters for which the
    /// count expressions are non-negative and the lattice is a genuine tube.
    pub fn validate(&self) -> Result<(), GenerateError> {
        let reject = |reason| {
            Err(GenerateError::InvalidParams { family: self.family(), reason })
        };
        match *self {
            FamilySpec::Tuc4c8s { p, q } | FamilySpec::Tuc4c8r { p, q } => {
                if p < 2 {
                    return reject("p must be at least 2");
                }
                if q < 2 {
                    return reject("q must be at least 2");
                }
            }
            FamilySpec::Tuc4 { p, q } => {
                if p < 3 {
                    return reject("p must be at least 3");
                }
                if q < 3 {
                    return reject("q must be at least 3");
                }
            }
            FamilySpec::Tuhc6 { p, q } => {
                if p < 2 {
                    return reject("p must be at least 2");
                }
                if q < 2 {
                    return reject("q must be at least 2");
                }
            }
            FamilySpec::Tuvc6 { p, q } => {
                if p < 2 {
                    return reject("p must be at least 2");
                }
                if q < 3 {
                    return reject("q must be at least 3");
                }
            }
            FamilySpec::Dendrimer { k, d } => {
                if k < 3 {
                    return reject("k must be at least 3");
                }
                if d < 1 {
                    return reject("d must be at least 1");
                }
            }
            FamilySpec::Circumcoronene { k } => {
                if k < 1 {
                    return reject("k must be at least 1");
                }
            }
            FamilySpec::MycielskiCycle { n } | FamilySpec::MycielskiPath { n } => {
                if n < 4 {
                    return reject("n must be at least 4");
                }
            }
        }
        if self.vertex_count().is_none() {
            return reject("graph too large for this build");
        }
        Ok(())
    }

    /// Closed-form vertex count, `None` on overflow past u32 ids.
    fn vertex_count(&self) -> Option<u64> {
        let n = match *self {
            FamilySpec::Tuc4c8s { p, q } | FamilySpec::Tuc4c8r { p, q } => {
                4 * p as u64 * q as u64
            }
            FamilySpec::Tuc4 { p, q } => p as u64 * q as u64,
            FamilySpec::Tuhc6 { p, q } | FamilySpec::Tuvc6 { p, q } => 2 * p as u64 * q as u64,
            FamilySpec::Dendrimer { k, d } => {
                let (k, d) = (k as u128, d);
                let pow = (k - 1).checked_pow(d)?;
                let n = (k.checked_mul(pow)? - 2) / (k - 2);
                u64::try_from(n).ok()?
            }
            FamilySpec::Circumcoronene { k } => 6 * k as u64 * k as u64,
            FamilySpec::MycielskiCycle { n } | FamilySpec::MycielskiPath { n } => {
                2 * n as u64 + 1
            }
        };
        (n <= u32::MAX as u64).then_some(n)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.param_values();
        write!(f, "{}", self.family())?;
        for (name, value) in [("p", v.p), ("q", v.q), ("k", v.k), ("d", v.d), ("n", v.n)] {
            if let Some(value) = value {
                write!(f, " {name}={value}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenerateError {
    /// Parameters outside the family's validity range.
    InvalidParams { family: Family, reason: &'static str },
    /// The generated graph disagrees with its count table; a construction
    /// bug, never returned silently.
    InternalConsistency { family: Family, detail: &'static str },
}

impl fmt::Display for GenerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenerateError::InvalidParams { family, reason } => {
                write!(f, "invalid parameters for {family}: {reason}")
            }
            GenerateError::InternalConsistency { family, detail } => {
                write!(f, "generated {family} graph failed its count checks: {detail}")
            }
        }
    }
}

impl core::error::Error for GenerateError {}

/// Expected structure of a generated family graph, straight from the
/// closed-form vertex/edge partition counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: u64,
    pub m: u64,
    /// degree -> vertex count.
    pub degree_counts: BTreeMap<u32, u64>,
    /// (low degree, high degree) of the endpoints -> edge count.
    pub edge_classes: BTreeMap<(u32, u32), u64>,
    /// Which family's count derivation the entries come from.
    pub source: &'static str,
}

struct TableBuilder {
    degree_counts: BTreeMap<u32, u64>,
    edge_classes: BTreeMap<(u32, u32), u64>,
}

impl TableBuilder {
    fn new() -> TableBuilder {
        TableBuilder { degree_counts: BTreeMap::new(), edge_classes: BTreeMap::new() }
    }

    /// Accumulating inserts keep coinciding degree classes (e.g. the
    /// Mycielski apex at small n) correct without special cases.
    fn vertices(&mut self, degree: u32, count: u64) {
        if count > 0 {
            *self.degree_counts.entry(degree).or_insert(0) += count;
        }
    }

    fn edges(&mut self, da: u32, db: u32, count: u64) {
        if count > 0 {
            *self.edge_classes.entry((da.min(db), da.max(db))).or_insert(0) += count;
        }
    }

    fn finish(self, n: u64, m: u64, source: &'static str) -> CountTable {
        let table =
            CountTable { n, m, degree_counts: self.degree_counts, edge_classes: self.edge_classes, source };
        debug_assert_eq!(table.degree_counts.values().sum::<u64>(), n);
        debug_assert_eq!(table.edge_classes.values().sum::<u64>(), m);
        debug_assert_eq!(
            table.degree_counts.iter().map(|(&d, &c)| d as u64 * c).sum::<u64>(),
            2 * m,
            "handshake"
        );
        table
    }
}

/// The vertex/edge partition counts a valid `spec` graph must exhibit.
pub fn count_table(spec: &FamilySpec) -> Result<CountTable, GenerateError> {
    spec.validate()?;
    let mut t = TableBuilder::new();
    let table = match *spec {
        FamilySpec::Tuc4c8s { p, q } => {
            let (p, q) = (p as u64, q as u64);
            t.vertices(2, 4 * p);
            t.vertices(3, 4 * p * (q - 1));
            t.edges(2, 3, 4 * p);
            t.edges(2, 2, 2 * p);
            t.edges(3, 3, 2 * p * (3 * q - 4));
            t.finish(4 * p * q, 2 * p * (3 * q - 1), "tuc4c8s")
        }
        FamilySpec::Tuc4c8r { p, q } => {
            let (p, q) = (p as u64, q as u64);
            t.vertices(2, 2 * p);
            t.vertices(3, 2 * p * (2 * q - 1));
            t.edges(2, 3, 4 * p);
            t.edges(3, 3, p * (6 * q - 5));
            t.finish(4 * p * q, p * (6 * q - 1), "tuc4c8r")
        }
        FamilySpec::Tuc4 { p, q } => {
            let (p, q) = (p as u64, q as u64);
            t.vertices(3, 2 * q);
            t.vertices(4, (p - 2) * q);
            t.edges(3, 4, 2 * q);
            t.edges(3, 3, 2 * q);
            t.edges(4, 4, q * (2 * p - 5));
            t.finish(p * q, q * (2 * p - 1), "tuc4")
        }
        FamilySpec::Tuhc6 { p, q } => {
            let (p, q) = (p as u64, q as u64);
            t.vertices(2, 2 * p);
            t.vertices(3, 2 * p * (q - 1));
            t.edges(2, 3, 4 * p);
            t.edges(3, 3, p * (3 * q - 5));
            t.finish(2 * p * q, p * (3 * q - 1), "tuhc6")
        }
        FamilySpec::Tuvc6 { p, q } => {
            let (p, q) = (p as u64, q as u64);
            t.vertices(2, 4 * p);
            t.vertices(3, 2 * p * (q - 2));
            t.edges(2, 3, 4 * p);
            t.edges(2, 2, 2 * p);
            t.edges(3, 3, p * (3 * q - 8));
            t.finish(2 * p * q, p * (3 * q - 2), "tuvc6")
        }
        FamilySpec::Dendrimer { k, d } => {
            let leaves = k as u64 * (k as u64 - 1).pow(d - 1);
            let internal = (k as u64 * (k as u64 - 1).pow(d - 1) - 2) / (k as u64 - 2);
            let n = spec.vertex_count().expect("validated");
            t.vertices(1, leaves);
            t.vertices(k, internal);
            t.edges(1, k, leaves);
            t.edges(k, k, n - 1 - leaves);
            t.finish(n, n - 1, "dendrimer")
        }
        FamilySpec::Circumcoronene { k } => {
            let k = k as u64;
            t.vertices(2, 6 * k);
            t.vertices(3, 6 * k * (k - 1));
            t.edges(2, 3, 12 * (k - 1));
            t.edges(2, 2, 6);
            t.edges(3, 3, 3 * (3 * k - 2) * (k - 1));
            t.finish(6 * k * k, 3 * k * (3 * k - 1), "circumcoronene")
        }
        FamilySpec::MycielskiCycle { n } => {
            let n64 = n as u64;
            t.vertices(4, n64);
            t.vertices(3, n64);
            t.vertices(n, 1);
            t.edges(4, 4, n64);
            t.edges(3, 4, 2 * n64);
            t.edges(3, n, n64);
            t.finish(2 * n64 + 1, 4 * n64, "mycielski-cycle")
        }
        FamilySpec::MycielskiPath { n } => {
            let n64 = n as u64;
            t.vertices(2, 4);
            t.vertices(4, n64 - 2);
            t.vertices(3, n64 - 2);
            t.vertices(n, 1);
            t.edges(2, 4, 4);
            t.edges(4, 4, n64 - 3);
            t.edges(2, 3, 2);
            t.edges(3, 4, 2 * (n64 - 3));
            t.edges(2, n, 2);
            t.edges(3, n, n64 - 2);
            t.finish(2 * n64 + 1, 4 * n64 - 3, "mycielski-path")
        }
    };
    Ok(table)
}

/// Edge counts of `g` keyed by the sorted endpoint-degree pair.
pub fn edge_classes(g: &Graph) -> BTreeMap<(u32, u32), u64> {
    let mut classes = BTreeMap::new();
    for (u, v) in g.edges() {
        let (du, dv) = (g.degree(u as usize) as u32, g.degree(v as usize) as u32);
        *classes.entry((du.min(dv), du.max(dv))).or_insert(0u64) += 1;
    }
    classes
}

/// Builds the family graph and cross-checks it against [`count_table`] and a
/// connectivity traversal before returning it.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GenerateError> {
    let table = count_table(spec)?;
    let family = spec.family();
    let bug = |detail| GenerateError::InternalConsistency { family, detail };

    let g = build(spec).map_err(|_| bug("construction emitted an invalid edge list"))?;

    if g.n() as u64 != table.n {
        return Err(bug("vertex count mismatch"));
    }
    if g.m() as u64 != table.m {
        return Err(bug("edge count mismatch"));
    }
    let ds = g.degree_sequence().map_err(|_| bug("empty graph"))?;
    if ds.counts != table.degree_counts {
        return Err(bug("degree histogram mismatch"));
    }
    if edge_classes(&g) != table.edge_classes {
        return Err(bug("edge class partition mismatch"));
    }
    if !g.is_connected() {
        return Err(bug("graph is not connected"));
    }
    Ok(g)
}

fn build(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match *spec {
        FamilySpec::Tuc4c8s { p, q } => {
            let row = 4 * p;
            let n = (row * q) as usize;
            let mut edges = Vec::with_capacity((2 * p * (3 * q - 1)) as usize);
            for r in 0..q {
                let base = r * row;
                for c in 0..row {
                    // each row is a cycle alternating C4/C8 faces
                    edges.push((base + c, base + (c + 1) % row));
                    // inter-row bonds sit on the two square-top positions of
                    // each period of four
                    if r + 1 < q && c % 4 <= 1 {
                        edges.push((base + c, base + row + c + 2));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Tuc4c8r { p, q } => {
            let n = (4 * p * q) as usize;
            let mut edges = Vec::with_capacity((p * (6 * q - 1)) as usize);
            for s in 0..p * q {
                let b = 4 * s;
                edges.extend([(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b, b + 3)]);
                let r = s / p;
                // third corner links to the next square of the same ring
                let target = if (s + 1) % p == 0 { 4 * r * p } else { 4 * (s + 1) };
                edges.push((b + 2, target));
                // fourth corner bonds diagonally to the square below
                if r + 1 < q {
                    edges.push((b + 3, 4 * (s + p) + 1));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Tuc4 { p, q } => {
            Ok(Graph::path(p as usize).cartesian_product(&Graph::cycle(q as usize)))
        }
        FamilySpec::Tuhc6 { p, q } => {
            let row = 2 * p;
            let n = (row * q) as usize;
            let mut edges = Vec::with_capacity((p * (3 * q - 1)) as usize);
            for r in 0..q {
                let base = r * row;
                for c in 0..row {
                    edges.push((base + c, base + (c + 1) % row));
                    // vertical bonds alternate odd/even columns by row parity
                    if r + 1 < q && c % 2 == r % 2 {
                        edges.push((base + c, base + row + c));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Tuvc6 { p, q } => {
            let row = 2 * p;
            let n = (row * q) as usize;
            let mut edges = Vec::with_capacity((p * (3 * q - 2)) as usize);
            for r in 0..q {
                let base = r * row;
                for c in 0..row {
                    if r + 1 < q {
                        edges.push((base + c, base + row + c));
                    }
                }
                // horizontal bonds pair up columns, phase shifting by one on
                // odd rows (with wrap-around), which makes the armchair pattern
                for t in 0..p {
                    if r % 2 == 0 {
                        edges.push((base + 2 * t, base + 2 * t + 1));
                    } else {
                        edges.push((base + 2 * t + 1, base + (2 * t + 2) % row));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Dendrimer { k, d } => {
            let mut edges = Vec::new();
            let mut next = 1u32;
            let mut level = vec![0u32];
            for depth in 0..d {
                let children = if depth == 0 { k } else { k - 1 };
                let mut below = Vec::with_capacity(level.len() * children as usize);
                for &v in &level {
                    for _ in 0..children {
                        edges.push((v, next));
                        below.push(next);
                        next += 1;
                    }
                }
                level = below;
            }
            Graph::from_edges(next as usize, &edges)
        }
        FamilySpec::Circumcoronene { k } => circumcoronene(k),
        FamilySpec::MycielskiCycle { n } => Ok(Graph::cycle(n as usize).mycielski()),
        FamilySpec::MycielskiPath { n } => Ok(Graph::path(n as usize).mycielski()),
    }
}

/// Corner offsets of a pointy-top hexagon whose center sits on the scaled
/// integer lattice; consecutive entries are the hexagon's sides.
const HEX_CORNERS: [(i64, i64); 6] = [(0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1)];

/// Circumcoronene from hexagonal axial coordinates: all hexagon cells within
/// hex-distance k−1 of the center, vertices are the distinct corners, edges
/// the shared corner pairs.
fn circumcoronene(k: u32) -> Result<Graph, GraphError> {
    let radius = k as i64 - 1;
    let cells = || {
        (-radius..=radius).flat_map(move |qa| {
            ((-radius).max(-qa - radius)..=radius.min(-qa + radius)).map(move |ra| {
                // cell center in corner-lattice coordinates
                (2 * qa + ra, 3 * ra)
            })
        })
    };

    let mut corners = BTreeSet::new();
    for (cx, cy) in cells() {
        for (dx, dy) in HEX_CORNERS {
            corners.insert((cx + dx, cy + dy));
        }
    }
    let ids: BTreeMap<(i64, i64), u32> =
        corners.into_iter().enumerate().map(|(i, c)| (c, i as u32)).collect();

    let mut edges = BTreeSet::new();
    for (cx, cy) in cells() {
        for t in 0..6 {
            let (ax, ay) = HEX_CORNERS[t];
            let (bx, by) = HEX_CORNERS[(t + 1) % 6];
            let a = ids[&(cx + ax, cy + ay)];
            let b = ids[&(cx + bx, cy + by)];
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<(u32, u32)> = edges.into_iter().collect();
    Graph::from_edges(ids.len(), &edges)
}
