//! Cell-parameterized graph families and vertex surgery.
//!
//! A connected threshold graph (nested split graph, NSG) splits into
//! co-clique cells `U_1..U_h` and clique cells `V_1..V_h`, with every vertex
//! of `U_i` adjacent to exactly `V_1 ∪ … ∪ V_i`. A connected chain graph
//! (double nested graph, DNG) is bipartite with the same cell structure and
//! every vertex of `U_i` adjacent to exactly `V_1 ∪ … ∪ V_{h−i+1}`, so `U_1`
//! sees all of `V`. Cell sizes `m_i = |U_i|`, `n_i = |V_i|` determine the
//! graph up to isomorphism.
//!
//! Construction is deterministic: vertices are numbered `U_1..U_h` then
//! `V_1..V_h`, each cell contiguous, which gives stable indices for
//! eigenvector coordinate checks.

use crate::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;

/// The two graph families handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Threshold graph / nested split graph.
    Nsg,
    /// Chain graph / double nested graph.
    Dng,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Nsg => "nsg",
            Family::Dng => "dng",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which color class a cell belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Co-clique side (independent set in both families).
    U,
    /// Clique side for NSG, second color class for DNG.
    V,
}

/// Cell membership tag `U_i` or `V_i`, with 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellTag {
    pub side: Side,
    pub index: usize,
}

impl CellTag {
    pub fn u(index: usize) -> Self {
        CellTag {
            side: Side::U,
            index,
        }
    }

    pub fn v(index: usize) -> Self {
        CellTag {
            side: Side::V,
            index,
        }
    }
}

impl fmt::Display for CellTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::U => write!(f, "U{}", self.index),
            Side::V => write!(f, "V{}", self.index),
        }
    }
}

impl Serialize for CellTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Symbolic parameterization of an NSG or DNG by cell sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    family: Family,
    m: Vec<usize>,
    n: Vec<usize>,
}

impl GraphSpec {
    /// Validates lengths and positivity; errors name the offending cell.
    pub fn new(family: Family, m: Vec<usize>, n: Vec<usize>) -> Result<Self> {
        if m.is_empty() || n.is_empty() {
            return Err(Error::EmptyCells);
        }
        if m.len() != n.len() {
            return Err(Error::CellLengthMismatch {
                m_len: m.len(),
                n_len: n.len(),
            });
        }
        for (i, &size) in m.iter().enumerate() {
            if size == 0 {
                return Err(Error::ZeroCell {
                    side: 'U',
                    index: i + 1,
                });
            }
        }
        for (i, &size) in n.iter().enumerate() {
            if size == 0 {
                return Err(Error::ZeroCell {
                    side: 'V',
                    index: i + 1,
                });
            }
        }
        Ok(GraphSpec { family, m, n })
    }

    pub fn nsg(m: Vec<usize>, n: Vec<usize>) -> Result<Self> {
        Self::new(Family::Nsg, m, n)
    }

    pub fn dng(m: Vec<usize>, n: Vec<usize>) -> Result<Self> {
        Self::new(Family::Dng, m, n)
    }

    /// Parses `nsg:2,2,2;2,3,2`, `dng:1,1;1,1`, or `half:4`.
    pub fn parse(input: &str) -> Result<Self> {
        let err = |token: &str, reason: &str| Error::SpecParse {
            input: input.to_string(),
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let (prefix, rest) = input
            .split_once(':')
            .ok_or_else(|| err(input, "expected 'nsg:', 'dng:' or 'half:' prefix"))?;
        let family = match prefix {
            "nsg" => Family::Nsg,
            "dng" => Family::Dng,
            "half" => {
                let h: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(rest, "half graph parameter must be a positive integer"))?;
                if h == 0 {
                    return Err(err(rest, "half graph parameter must be at least 1"));
                }
                return GraphSpec::dng(vec![1; h], vec![1; h]);
            }
            other => return Err(err(other, "unknown family prefix")),
        };
        let (m_part, n_part) = rest
            .split_once(';')
            .ok_or_else(|| err(rest, "expected ';' between m-list and n-list"))?;
        let parse_list = |part: &str| -> Result<Vec<usize>> {
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| err(tok, "cell size must be a non-negative integer"))
                })
                .collect()
        };
        GraphSpec::new(family, parse_list(m_part)?, parse_list(n_part)?)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of cells per side.
    pub fn h(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    pub fn n(&self) -> &[usize] {
        &self.n
    }

    /// `M_h`, the size of the U side.
    pub fn m_total(&self) -> usize {
        self.m.iter().sum()
    }

    /// `N_h`, the size of the V side.
    pub fn n_total(&self) -> usize {
        self.n.iter().sum()
    }

    pub fn order(&self) -> usize {
        self.m_total() + self.n_total()
    }

    /// NSG suffix on cells `s+1..h`: the graph left after deleting
    /// `U_1..U_s` and `V_1..V_s`. Valid for `1 ≤ s ≤ h−1`.
    pub fn tail_from(&self, s: usize) -> Result<GraphSpec> {
        self.expect_family(Family::Nsg)?;
        let h = self.h();
        if s < 1 || s + 1 > h {
            return Err(Error::IndexOutOfRange {
                what: "NSG tail slice",
                index: s,
                min: 1,
                max: h.saturating_sub(1),
            });
        }
        GraphSpec::nsg(self.m[s..].to_vec(), self.n[s..].to_vec())
    }

    /// NSG prefix on cells `1..s`, an induced subgraph of the original.
    /// Valid for `1 ≤ s ≤ h`.
    pub fn head_to(&self, s: usize) -> Result<GraphSpec> {
        self.expect_family(Family::Nsg)?;
        let h = self.h();
        if s < 1 || s > h {
            return Err(Error::IndexOutOfRange {
                what: "NSG head slice",
                index: s,
                min: 1,
                max: h,
            });
        }
        GraphSpec::nsg(self.m[..s].to_vec(), self.n[..s].to_vec())
    }

    /// NSG with the clique cell `V_s` deleted: `U_{s−1}` and `U_s` then share
    /// a neighborhood and merge into one cell of size `m_{s−1}+m_s`. Valid
    /// for `2 ≤ s ≤ h`.
    pub fn merge_without_v(&self, s: usize) -> Result<GraphSpec> {
        self.expect_family(Family::Nsg)?;
        let h = self.h();
        if s < 2 || s > h {
            return Err(Error::IndexOutOfRange {
                what: "NSG V-cell merge",
                index: s,
                min: 2,
                max: h,
            });
        }
        let mut m = Vec::with_capacity(h - 1);
        m.extend_from_slice(&self.m[..s - 2]);
        m.push(self.m[s - 2] + self.m[s - 1]);
        m.extend_from_slice(&self.m[s..]);
        let mut n = Vec::with_capacity(h - 1);
        n.extend_from_slice(&self.n[..s - 1]);
        n.extend_from_slice(&self.n[s..]);
        GraphSpec::nsg(m, n)
    }

    /// DNG pair for cut index `s` (valid `2 ≤ s ≤ h−1`): the first spec is
    /// the induced subgraph on `U_1..U_{s−1} ∪ V_{h−s+2}..V_h`, the second
    /// the induced subgraph on `U_s..U_h ∪ V_1..V_{h−s+1}`.
    pub fn chain_parts(&self, s: usize) -> Result<(GraphSpec, GraphSpec)> {
        self.expect_family(Family::Dng)?;
        let h = self.h();
        if s < 2 || s + 1 > h {
            return Err(Error::IndexOutOfRange {
                what: "DNG cut",
                index: s,
                min: 2,
                max: h.saturating_sub(1),
            });
        }
        let prime = GraphSpec::dng(self.m[..s - 1].to_vec(), self.n[h - s + 1..].to_vec())?;
        let double_prime = GraphSpec::dng(self.m[s - 1..].to_vec(), self.n[..h - s + 1].to_vec())?;
        Ok((prime, double_prime))
    }

    fn expect_family(&self, family: Family) -> Result<()> {
        if self.family != family {
            return Err(Error::WrongFamily {
                expected: family.as_str(),
                got: self.family.as_str(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}:{};{}", self.family, join(&self.m), join(&self.n))
    }
}

/// Derived specs used by the neutral-vertex localization theorems.
///
/// For an NSG: `tail` is the suffix `(m_{s+1..}; n_{s+1..})`, `head` the
/// prefix `(m_{1..s}; n_{1..s})`, and `merged` is the graph with `V_s`
/// deleted. For a DNG: `tail`/`head` are the two `chain_parts` slices and
/// `merged` is absent. Pieces whose index is outside the corresponding
/// theorem's range are `None`.
#[derive(Debug, Clone)]
pub struct DerivedSpecs {
    pub tail: Option<GraphSpec>,
    pub head: Option<GraphSpec>,
    pub merged: Option<GraphSpec>,
}

/// All derived specs defined at index `s`; errors when none is.
pub fn derived_specs(spec: &GraphSpec, s: usize) -> Result<DerivedSpecs> {
    let derived = match spec.family() {
        Family::Nsg => DerivedSpecs {
            tail: spec.tail_from(s).ok(),
            head: spec.head_to(s).ok(),
            merged: spec.merge_without_v(s).ok(),
        },
        Family::Dng => {
            let parts = spec.chain_parts(s).ok();
            DerivedSpecs {
                tail: parts.as_ref().map(|p| p.0.clone()),
                head: parts.map(|p| p.1),
                merged: None,
            }
        }
    };
    if derived.tail.is_none() && derived.head.is_none() && derived.merged.is_none() {
        return Err(Error::IndexOutOfRange {
            what: "derived specs",
            index: s,
            min: 1,
            max: spec.h(),
        });
    }
    Ok(derived)
}

/// Concrete labeled graph with dense symmetric adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    adj: Vec<bool>,
    labels: Vec<Option<CellTag>>,
}

impl Graph {
    /// Edgeless graph with all labels empty.
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            adj: vec![false; order * order],
            labels: vec![None; order],
        }
    }

    /// Untagged graph from an explicit edge list; panics on out-of-range
    /// ids or self-loops (test/CLI construction helper).
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            assert!(u < order && v < order && u != v, "bad edge ({u},{v})");
            g.set_edge(u, v, true);
        }
        g
    }

    fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        self.adj[u * self.order + v] = present;
        self.adj[v * self.order + u] = present;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.order + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.order).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&u| self.has_edge(v, u))
    }

    /// Edges as `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in (u + 1)..self.order {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn label(&self, v: usize) -> Option<CellTag> {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Option<CellTag>] {
        &self.labels
    }

    /// Vertices carrying `tag`, ascending.
    pub fn cell_vertices(&self, tag: CellTag) -> Vec<usize> {
        (0..self.order)
            .filter(|&v| self.labels[v] == Some(tag))
            .collect()
    }

    /// Distinct tags present, sorted `U_1 < U_2 < … < V_1 < …`, each with
    /// its member vertices.
    pub fn cells(&self) -> Vec<(CellTag, Vec<usize>)> {
        let mut tags: Vec<CellTag> = self.labels.iter().flatten().copied().collect();
        tags.sort();
        tags.dedup();
        tags.into_iter()
            .map(|t| (t, self.cell_vertices(t)))
            .collect()
    }

    /// Row-major adjacency matrix as floats.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        self.adj
            .iter()
            .map(|&b| if b { 1.0 } else { 0.0 })
            .collect()
    }

    /// Induced subgraph on everything but `v`; surviving labels keep their
    /// tags.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        let keep: Vec<usize> = (0..self.order).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on `keep` (ids in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph {
            order: keep.len(),
            adj: vec![false; keep.len() * keep.len()],
            labels: keep.iter().map(|&u| self.labels[u]).collect(),
        };
        for (i, &u) in keep.iter().enumerate() {
            for (j, &w) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Adds one vertex (at the last index) with neighborhood exactly `N(v)`,
    /// not adjacent to `v` itself, carrying `v`'s tag.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        let n = self.order;
        let mut g = Graph {
            order: n + 1,
            adj: vec![false; (n + 1) * (n + 1)],
            labels: self.labels.clone(),
        };
        g.labels.push(self.labels[v]);
        for u in 0..n {
            for w in (u + 1)..n {
                if self.has_edge(u, w) {
                    g.set_edge(u, w, true);
                }
            }
        }
        for u in self.neighbors(v) {
            g.set_edge(n, u, true);
        }
        Ok(g)
    }

    /// Reorders vertices so tagged cells come out in canonical order
    /// (`U_1..U_h` then `V_1..V_h`, stable within a cell, untagged last).
    /// Lets surgery results be compared bit-for-bit against `build`.
    pub fn sort_by_tags(&self) -> Graph {
        let mut perm: Vec<usize> = (0..self.order).collect();
        perm.sort_by_key(|&v| match self.labels[v] {
            Some(tag) => (0, tag.side, tag.index, v),
            None => (1, Side::U, 0, v),
        });
        self.induced(&perm)
    }

    /// Edge-list text: one `u v` per line, 0-based, preceded and followed by
    /// `#` comment lines carrying order and labels.
    pub fn edge_list_text(&self) -> String {
        let mut out = format!("# order={} edges={}\n", self.order, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        let labels: Vec<String> = (0..self.order)
            .map(|v| match self.labels[v] {
                Some(tag) => format!("{v}={tag}"),
                None => format!("{v}=-"),
            })
            .collect();
        out.push_str(&format!("# labels: {}\n", labels.join(" ")));
        out
    }

    /// JSON object `{order, edges, labels}`.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .edges()
            .into_iter()
            .map(|(u, v)| serde_json::json!([u, v]))
            .collect();
        let labels: Vec<serde_json::Value> = self
            .labels
            .iter()
            .map(|l| match l {
                Some(tag) => serde_json::Value::String(tag.to_string()),
                None => serde_json::Value::Null,
            })
            .collect();
        serde_json::json!({
            "order": self.order,
            "edges": edges,
            "labels": labels,
        })
    }
}

/// Builds the concrete graph for a spec. Specs are validated at
/// construction, so this cannot fail.
pub fn build(spec: &GraphSpec) -> Graph {
    let h = spec.h();
    let order = spec.order();
    let mut labels = Vec::with_capacity(order);
    for (i, &size) in spec.m().iter().enumerate() {
        labels.extend(std::iter::repeat_n(Some(CellTag::u(i + 1)), size));
    }
    for (i, &size) in spec.n().iter().enumerate() {
        labels.extend(std::iter::repeat_n(Some(CellTag::v(i + 1)), size));
    }
    let mut g = Graph {
        order,
        adj: vec![false; order * order],
        labels,
    };
    let m_total = spec.m_total();
    // cell start offsets
    let mut u_start = vec![0usize; h + 1];
    for i in 0..h {
        u_start[i + 1] = u_start[i] + spec.m()[i];
    }
    let mut v_start = vec![m_total; h + 1];
    for i in 0..h {
        v_start[i + 1] = v_start[i] + spec.n()[i];
    }

    if spec.family() == Family::Nsg {
        for a in m_total..order {
            for b in (a + 1)..order {
                g.set_edge(a, b, true);
            }
        }
    }
    for i in 1..=h {
        let top_v = match spec.family() {
            Family::Nsg => i,
            Family::Dng => h - i + 1,
        };
        for u in u_start[i - 1]..u_start[i] {
            for v in v_start[0]..v_start[top_v] {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// The half graph `H(h)`: the DNG with all `2h` cells of size 1, so
/// `u_i ~ v_j` iff `j ≤ h−i+1`. Order `2h`, `h(h+1)/2` edges.
pub fn half_graph(h: usize) -> Result<Graph> {
    if h == 0 {
        return Err(Error::BadBound {
            what: "half graph parameter h",
            min: 1,
            got: 0,
        });
    }
    Ok(build(&GraphSpec::dng(vec![1; h], vec![1; h])?))
}

/// Forbidden-induced-subgraph membership test: threshold graphs are
/// {P_4, 2K_2, C_4}-free, chain graphs are {2K_2, C_3, C_5}-free.
/// Brute force over all 3-, 4-, and 5-subsets.
pub fn validate_family(g: &Graph, family: Family) -> bool {
    match family {
        Family::Nsg => !has_induced_on_4(g, true),
        Family::Dng => !has_triangle(g) && !has_induced_on_4(g, false) && !has_induced_c5(g),
    }
}

fn has_triangle(g: &Graph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in (a + 1)..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    return true;
                }
            }
        }
    }
    false
}

/// Scans 4-subsets. With `threshold` set, detects induced P_4, 2K_2, or
/// C_4; otherwise only induced 2K_2.
fn has_induced_on_4(g: &Graph, threshold: bool) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in (a + 1)..n {
            let ab = g.has_edge(a, b);
            for c in (b + 1)..n {
                let ac = g.has_edge(a, c);
                let bc = g.has_edge(b, c);
                for d in (c + 1)..n {
                    let ad = g.has_edge(a, d);
                    let bd = g.has_edge(b, d);
                    let cd = g.has_edge(c, d);
                    let edges = ab as u8 + ac as u8 + bc as u8 + ad as u8 + bd as u8 + cd as u8;
                    match edges {
                        2 => {
                            // disjoint pair = induced 2K_2
                            if (ab && cd) || (ac && bd) || (ad && bc) {
                                return true;
                            }
                        }
                        3 if threshold => {
                            // P_4 iff degrees are 1,1,2,2 (star has a 3, triangle+isolate a 0)
                            let deg = [
                                ab as u8 + ac as u8 + ad as u8,
                                ab as u8 + bc as u8 + bd as u8,
                                ac as u8 + bc as u8 + cd as u8,
                                ad as u8 + bd as u8 + cd as u8,
                            ];
                            if deg.iter().all(|&d| d == 1 || d == 2) {
                                return true;
                            }
                        }
                        4 if threshold => {
                            let deg = [
                                ab as u8 + ac as u8 + ad as u8,
                                ab as u8 + bc as u8 + bd as u8,
                                ac as u8 + bc as u8 + cd as u8,
                                ad as u8 + bd as u8 + cd as u8,
                            ];
                            if deg.iter().all(|&d| d == 2) {
                                return true;
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    false
}

fn has_induced_c5(g: &Graph) -> bool {
    let n = g.order();
    let mut subset = [0usize; 5];
    fn rec(g: &Graph, n: usize, subset: &mut [usize; 5], depth: usize, start: usize) -> bool {
        if depth == 5 {
            let mut edges = 0;
            let mut deg = [0u8; 5];
            for i in 0..5 {
                for j in (i + 1)..5 {
                    if g.has_edge(subset[i], subset[j]) {
                        edges += 1;
                        deg[i] += 1;
                        deg[j] += 1;
                    }
                }
            }
            return edges == 5 && deg.iter().all(|&d| d == 2);
        }
        for v in start..n {
            subset[depth] = v;
            if rec(g, n, subset, depth + 1, v + 1) {
                return true;
            }
        }
        false
    }
    rec(g, n, &mut subset, 0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GraphSpec {
        GraphSpec::parse(s).unwrap()
    }

    /// Independent edge-count oracle straight from the adjacency rules.
    fn expected_edges(sp: &GraphSpec) -> usize {
        let h = sp.h();
        let cross: usize = (1..=h)
            .map(|i| {
                let top = match sp.family() {
                    Family::Nsg => i,
                    Family::Dng => h - i + 1,
                };
                sp.m()[i - 1] * sp.n()[..top].iter().sum::<usize>()
            })
            .sum();
        match sp.family() {
            Family::Nsg => {
                let nh = sp.n_total();
                nh * (nh - 1) / 2 + cross
            }
            Family::Dng => cross,
        }
    }

    #[test]
    fn smallest_nsg_is_k2() {
        let g = build(&spec("nsg:1;1"));
        assert_eq!(g.order(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn nsg_222_232_counts() {
        let g = build(&spec("nsg:2,2,2;2,3,2"));
        assert_eq!(g.order(), 13);
        // 21 clique edges + 4 + 10 + 14 cross edges
        assert_eq!(g.edge_count(), 49);
        assert_eq!(expected_edges(&spec("nsg:2,2,2;2,3,2")), 49);
    }

    #[test]
    fn dng_11_11_is_p4() {
        let g = build(&spec("dng:1,1;1,1"));
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 3);
        // path v2 - u1 - v1 - u2 under ids u1=0 u2=1 v1=2 v2=3
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3) && g.has_edge(1, 2));
        let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn nsg_adjacency_rule_holds() {
        let sp = spec("nsg:2,2,2;2,3,2");
        let g = build(&sp);
        for u in 0..g.order() {
            let Some(tag) = g.label(u) else { panic!() };
            for v in 0..g.order() {
                if u == v {
                    continue;
                }
                let vt = g.label(v).unwrap();
                let expect = match (tag.side, vt.side) {
                    (Side::U, Side::U) => false,
                    (Side::V, Side::V) => true,
                    (Side::U, Side::V) => vt.index <= tag.index,
                    (Side::V, Side::U) => tag.index <= vt.index,
                };
                assert_eq!(g.has_edge(u, v), expect, "u={u} v={v}");
            }
        }
    }

    #[test]
    fn dng_adjacency_rule_holds() {
        let sp = spec("dng:2,1,3;1,2,2");
        let g = build(&sp);
        let h = sp.h();
        for u in 0..g.order() {
            let ut = g.label(u).unwrap();
            for v in 0..g.order() {
                if u == v {
                    continue;
                }
                let vt = g.label(v).unwrap();
                let expect = match (ut.side, vt.side) {
                    (Side::U, Side::V) => vt.index <= h - ut.index + 1,
                    (Side::V, Side::U) => ut.index <= h - vt.index + 1,
                    _ => false,
                };
                assert_eq!(g.has_edge(u, v), expect);
            }
        }
        assert_eq!(g.edge_count(), expected_edges(&sp));
    }

    #[test]
    fn half_graph_basics() {
        assert_eq!(half_graph(1).unwrap().edge_count(), 1);
        let h2 = half_graph(2).unwrap();
        assert_eq!(h2, build(&spec("dng:1,1;1,1")));
        let h4 = half_graph(4).unwrap();
        assert_eq!(h4.order(), 8);
        assert_eq!(h4.edge_count(), 10);
        assert!(half_graph(0).is_err());
        for h in 1..=9 {
            assert_eq!(half_graph(h).unwrap().edge_count(), h * (h + 1) / 2);
        }
    }

    #[test]
    fn build_is_deterministic() {
        let sp = spec("nsg:1,2;2,1");
        assert_eq!(build(&sp), build(&sp));
    }

    #[test]
    fn delete_vertex_cases() {
        let k2 = build(&spec("nsg:1;1"));
        let k1 = k2.delete_vertex(0).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);

        // NSG(2;1): clique vertex is id 2
        let g = build(&spec("nsg:2;1"));
        let cc = g.delete_vertex(2).unwrap();
        assert_eq!(cc.order(), 2);
        assert_eq!(cc.edge_count(), 0);

        let p4 = half_graph(2).unwrap();
        // end vertices of the path v2-u1-v1-u2 are ids 3 and 1
        let p3 = p4.delete_vertex(3).unwrap();
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.edge_count(), 2);
        let mut degs: Vec<usize> = (0..3).map(|v| p3.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2]);

        assert!(k2.delete_vertex(2).is_err());
    }

    #[test]
    fn duplicate_vertex_cases() {
        let k2 = build(&spec("nsg:1;1"));
        let p3 = k2.duplicate_vertex(0).unwrap();
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.edge_count(), 2);
        assert!(!p3.has_edge(0, 2));

        // H(4): duplicating u_2 (id 1) matches DNG(1,2,1,1;1,1,1,1)
        let h4 = half_graph(4).unwrap();
        let dup = h4.duplicate_vertex(1).unwrap().sort_by_tags();
        assert_eq!(dup, build(&spec("dng:1,2,1,1;1,1,1,1")));
        assert_eq!(dup.order(), 9);

        // K_{1,3} = NSG(3;1): duplicating a leaf gives K_{1,4}
        let star = build(&spec("nsg:3;1"));
        let bigger = star.duplicate_vertex(0).unwrap().sort_by_tags();
        assert_eq!(bigger, build(&spec("nsg:4;1")));

        assert!(k2.duplicate_vertex(5).is_err());
    }

    #[test]
    fn duplicate_then_delete_roundtrip() {
        for s in ["nsg:2,1;1,3", "dng:1,2;2,1", "nsg:1;1"] {
            let g = build(&spec(s));
            for v in 0..g.order() {
                let dup = g.duplicate_vertex(v).unwrap();
                assert_eq!(dup.delete_vertex(g.order()).unwrap(), g);
            }
        }
    }

    #[test]
    fn validate_family_examples() {
        let k2 = build(&spec("nsg:1;1"));
        assert!(validate_family(&k2, Family::Nsg));
        assert!(validate_family(&k2, Family::Dng));

        let c4 = build(&spec("dng:2;2"));
        assert!(validate_family(&c4, Family::Dng));
        assert!(!validate_family(&c4, Family::Nsg));

        let p4 = half_graph(2).unwrap();
        assert!(validate_family(&p4, Family::Dng));
        assert!(!validate_family(&p4, Family::Nsg));

        // triangle and C_5 are not chain graphs
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(!validate_family(&c3, Family::Dng));
        assert!(validate_family(&c3, Family::Nsg)); // K_3 = NSG(1;2)
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(!validate_family(&c5, Family::Dng));
        assert!(!validate_family(&c5, Family::Nsg));

        // 2K_2 is forbidden in both
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(!validate_family(&two_k2, Family::Nsg));
        assert!(!validate_family(&two_k2, Family::Dng));
    }

    #[test]
    fn derived_spec_examples() {
        let g = spec("nsg:1,1,5;1,1,8");
        assert_eq!(g.head_to(2).unwrap(), spec("nsg:1,1;1,1"));

        let g = spec("nsg:2,2,2;2,3,2");
        assert_eq!(g.tail_from(1).unwrap(), spec("nsg:2,2;3,2"));

        let g = spec("nsg:1,2,3;1,1,1");
        assert_eq!(g.merge_without_v(2).unwrap(), spec("nsg:3,3;1,1"));

        let d = spec("dng:1,2,3,4;4,3,2,1");
        let (prime, double_prime) = d.chain_parts(2).unwrap();
        assert_eq!(prime, spec("dng:1;1"));
        assert_eq!(double_prime, spec("dng:2,3,4;4,3,2"));

        assert!(spec("nsg:1;1").tail_from(1).is_err());
        assert!(derived_specs(&spec("nsg:2,2;1,1"), 5).is_err());
        let rec = derived_specs(&spec("nsg:2,2,2;2,3,2"), 1).unwrap();
        assert!(rec.tail.is_some() && rec.head.is_some() && rec.merged.is_none());
    }

    fn same_adjacency(a: &Graph, b: &Graph) -> bool {
        a.order() == b.order()
            && (0..a.order()).all(|i| {
                (0..a.order()).all(|j| a.adj[i * a.order() + j] == b.adj[i * b.order() + j])
            })
    }

    #[test]
    fn chain_parts_are_induced_subgraphs() {
        // each derived spec must build exactly the induced subgraph it names
        // (vertex order of the filtered id list matches the canonical order)
        let sp = spec("dng:2,1,3,1;1,2,1,2");
        let g = build(&sp);
        let h = sp.h();
        for s in 2..h {
            let (prime, double_prime) = sp.chain_parts(s).unwrap();
            let keep_prime: Vec<usize> = (0..g.order())
                .filter(|&v| {
                    let t = g.label(v).unwrap();
                    match t.side {
                        Side::U => t.index < s,
                        Side::V => t.index >= h - s + 2,
                    }
                })
                .collect();
            assert!(same_adjacency(&g.induced(&keep_prime), &build(&prime)));

            let keep_dp: Vec<usize> = (0..g.order())
                .filter(|&v| {
                    let t = g.label(v).unwrap();
                    match t.side {
                        Side::U => t.index >= s,
                        Side::V => t.index <= h - s + 1,
                    }
                })
                .collect();
            assert!(same_adjacency(&g.induced(&keep_dp), &build(&double_prime)));
        }
    }

    #[test]
    fn nsg_derived_slices_are_induced_subgraphs() {
        let sp = spec("nsg:2,1,3;1,2,2");
        let g = build(&sp);
        for s in 1..sp.h() {
            let tail = sp.tail_from(s).unwrap();
            let keep: Vec<usize> = (0..g.order())
                .filter(|&v| g.label(v).unwrap().index > s)
                .collect();
            assert!(same_adjacency(&g.induced(&keep), &build(&tail)));
        }
        for s in 1..=sp.h() {
            let head = sp.head_to(s).unwrap();
            let keep: Vec<usize> = (0..g.order())
                .filter(|&v| g.label(v).unwrap().index <= s)
                .collect();
            assert!(same_adjacency(&g.induced(&keep), &build(&head)));
        }
        for s in 2..=sp.h() {
            let merged = sp.merge_without_v(s).unwrap();
            let keep: Vec<usize> = (0..g.order())
                .filter(|&v| {
                    let t = g.label(v).unwrap();
                    !(t.side == Side::V && t.index == s)
                })
                .collect();
            assert!(same_adjacency(&g.induced(&keep), &build(&merged)));
        }
    }

    #[test]
    fn parse_and_display() {
        let sp = spec("nsg:2,2,2;2,3,2");
        assert_eq!(sp.to_string(), "nsg:2,2,2;2,3,2");
        assert_eq!(spec("half:3"), spec("dng:1,1,1;1,1,1"));
        assert!(GraphSpec::parse("nsg:0;1").is_err());
        assert!(GraphSpec::parse("nsg:1,2").is_err());
        assert!(GraphSpec::parse("foo:1;1").is_err());
        assert!(GraphSpec::parse("nsg:1,x;1,1").is_err());
        assert!(GraphSpec::parse("half:0").is_err());
        assert!(GraphSpec::parse("nsg:1,1;1").is_err());
    }

    #[test]
    fn exports() {
        let g = build(&spec("nsg:1;1"));
        let text = g.edge_list_text();
        assert!(text.contains("0 1\n"));
        assert!(text.contains("0=U1 1=V1"));
        let json = g.to_json();
        assert_eq!(json["order"], 2);
        assert_eq!(json["edges"][0][1], 1);
        assert_eq!(json["labels"][1], "V1");
    }
}
