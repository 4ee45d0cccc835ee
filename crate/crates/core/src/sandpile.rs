//! Directed multigraphs, their Laplacians and critical (sandpile) groups,
//! Cayley graphs of dual abelian groups and covering-induced maps.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chartables::{
    reduced_critical_matrix, res_map_on_critical_groups, restrict_rep, restriction_matrix,
    tensor_action_matrix, CharacterTable, ClassFusion, RepVector,
};
use crate::error::{Error, Result};
use crate::linalg::{
    cokernel, induced_cokernel_map, solve_integer, AbelianGroup, CokernelMap, IntMatrix,
};

/// A finite directed multigraph with an optional sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertices: Vec<String>,
    /// `adj[(i, j)]` counts edges `i → j`.
    adj: BTreeMap<(usize, usize), u64>,
    sink: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<String>,
    edges: Vec<(String, String, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sink: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    undirected: bool,
}

impl Digraph {
    pub fn new(vertices: Vec<String>) -> Result<Self> {
        let mut seen = vertices.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != vertices.len() {
            return Err(Error::Invalid("duplicate vertex names".into()));
        }
        Ok(Digraph {
            vertices,
            adj: BTreeMap::new(),
            sink: None,
        })
    }

    pub fn add_edge(&mut self, from: usize, to: usize, mult: u64) -> Result<()> {
        let n = self.vertices.len();
        if from >= n || to >= n {
            return Err(Error::Invalid(format!("edge {from} → {to} leaves the vertex set")));
        }
        if mult == 0 {
            return Err(Error::Invalid("edge multiplicity must be positive".into()));
        }
        *self.adj.entry((from, to)).or_insert(0) += mult;
        Ok(())
    }

    pub fn set_sink(&mut self, sink: usize) -> Result<()> {
        if sink >= self.vertices.len() {
            return Err(Error::Invalid(format!("sink {sink} is not a vertex")));
        }
        self.sink = Some(sink);
        Ok(())
    }

    /// Directed cycle `0 → 1 → … → n−1 → 0`, sink `0`.
    pub fn directed_cycle(n: usize) -> Self {
        let mut g = Digraph::new((0..n).map(|i| i.to_string()).collect()).expect("distinct names");
        for i in 0..n {
            g.add_edge(i, (i + 1) % n, 1).expect("in range");
        }
        g.sink = Some(0);
        g
    }

    /// Undirected cycle: each edge in both orientations, sink `0`.
    pub fn undirected_cycle(n: usize) -> Self {
        let mut g = Digraph::new((0..n).map(|i| i.to_string()).collect()).expect("distinct names");
        for i in 0..n {
            g.add_edge(i, (i + 1) % n, 1).expect("in range");
            g.add_edge((i + 1) % n, i, 1).expect("in range");
        }
        g.sink = Some(0);
        g
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn sink(&self) -> Option<usize> {
        self.sink
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_multiplicity(&self, from: usize, to: usize) -> u64 {
        self.adj.get(&(from, to)).copied().unwrap_or(0)
    }

    /// Edges as `(source, target, multiplicity)`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.adj.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    pub fn out_degree(&self, v: usize) -> u64 {
        self.edges().filter(|e| e.0 == v).map(|e| e.2).sum()
    }

    pub fn in_degree(&self, v: usize) -> u64 {
        self.edges().filter(|e| e.1 == v).map(|e| e.2).sum()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawGraph = serde_json::from_str(s)?;
        let mut g = Digraph::new(raw.vertices)?;
        let idx = |g: &Digraph, name: &str| {
            g.vertex_index(name)
                .ok_or_else(|| Error::Invalid(format!("unknown vertex {name:?}")))
        };
        for (a, b, m) in &raw.edges {
            let (i, j) = (idx(&g, a)?, idx(&g, b)?);
            g.add_edge(i, j, *m)?;
            if raw.undirected && i != j {
                g.add_edge(j, i, *m)?;
            }
        }
        if let Some(s) = raw.sink {
            let i = idx(&g, &s)?;
            g.sink = Some(i);
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        let raw = RawGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges()
                .map(|(a, b, m)| (self.vertices[a].clone(), self.vertices[b].clone(), m))
                .collect(),
            sink: self.sink.map(|s| self.vertices[s].clone()),
            undirected: false,
        };
        serde_json::to_string(&raw).expect("graph serializes")
    }

    fn resolve_sink(&self, sink: Option<usize>) -> Result<usize> {
        let s = sink
            .or(self.sink)
            .ok_or_else(|| Error::Invalid("no sink given".into()))?;
        if s >= self.len() {
            return Err(Error::Invalid(format!("sink {s} is not a vertex")));
        }
        Ok(s)
    }

    /// Whether every vertex has a directed path to `sink`.
    pub fn reaches(&self, sink: usize) -> bool {
        let mut seen = vec![false; self.len()];
        seen[sink] = true;
        let mut queue = VecDeque::from([sink]);
        while let Some(v) = queue.pop_front() {
            for (a, b, _) in self.edges() {
                if b == v && !seen[a] {
                    seen[a] = true;
                    queue.push_back(a);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }
}

/// `L̃_{ii} = d_i − a_{ii}`, `L̃_{ij} = −a_{ij}`, with `a_{ij}` counting
/// edges `i → j`; rows sum to zero.
pub fn laplacian(g: &Digraph) -> IntMatrix {
    let n = g.len();
    let mut l = IntMatrix::zeros(n, n);
    for (a, b, m) in g.edges() {
        if a != b {
            l[(a, a)] += BigInt::from(m);
            l[(a, b)] -= BigInt::from(m);
        }
    }
    l
}

fn non_sink(g: &Digraph, sink: usize) -> Vec<usize> {
    (0..g.len()).filter(|&v| v != sink).collect()
}

/// `L̃` without the sink's row and column.
pub fn reduced_laplacian(g: &Digraph, sink: Option<usize>) -> Result<IntMatrix> {
    let s = g.resolve_sink(sink)?;
    let keep = non_sink(g, s);
    Ok(laplacian(g).submatrix(&keep, &keep))
}

/// `K(Γ) = coker L(Γ)`.
pub fn graph_critical_group(g: &Digraph, sink: Option<usize>) -> Result<AbelianGroup> {
    let s = g.resolve_sink(sink)?;
    if !g.reaches(s) {
        return Err(Error::Invalid(format!(
            "some vertex has no directed path to the sink {:?}",
            g.vertices[s]
        )));
    }
    let k = cokernel(&reduced_laplacian(g, Some(s))?);
    if !k.is_finite() {
        return Err(Error::Internal("reduced Laplacian is singular".into()));
    }
    Ok(k)
}

/// Spanning trees directed towards the sink, via `det L(Γ)`.
pub fn spanning_tree_count(g: &Digraph, sink: Option<usize>) -> Result<BigInt> {
    reduced_laplacian(g, sink)?.determinant()
}

/// `Cay(Ĝ, S_V)`: vertices are the irreducible characters, with one edge
/// `χ → χψ` for each constituent `ψ` of `V` counted with multiplicity.
/// The sink is the trivial character.
pub fn cayley_graph(table: &CharacterTable, v: &RepVector) -> Result<Digraph> {
    if !table.is_abelian() {
        return Err(Error::Invalid(format!("{} is not abelian", table.name())));
    }
    let t = tensor_action_matrix(table, v)?;
    let mut g = Digraph::new(table.irreps().to_vec())?;
    for i in 0..t.rows() {
        for j in 0..t.cols() {
            let m = u64::try_from(&t[(i, j)]).map_err(|_| {
                Error::Invalid("edge multiplicities must be nonnegative".into())
            })?;
            if m > 0 {
                g.add_edge(i, j, m)?;
            }
        }
    }
    g.sink = Some(table.trivial_index());
    Ok(g)
}

#[derive(Clone, Debug)]
pub struct CoveringMap {
    pub source: Digraph,
    pub target: Digraph,
    pub vertex_map: Vec<usize>,
    pub verified: bool,
}

impl CoveringMap {
    /// Checks that edges map to edges and that for every vertex the out- and
    /// in-edge fibres map bijectively onto those of its image.
    pub fn check(source: &Digraph, target: &Digraph, vertex_map: &[usize]) -> bool {
        if vertex_map.len() != source.len() || vertex_map.iter().any(|&w| w >= target.len()) {
            return false;
        }
        let mut out: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        let mut inc: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (a, b, m) in source.edges() {
            *out.entry((a, vertex_map[b])).or_insert(0) += m;
            *inc.entry((b, vertex_map[a])).or_insert(0) += m;
        }
        (0..source.len()).all(|v| {
            let w = vertex_map[v];
            (0..target.len()).all(|u| {
                out.get(&(v, u)).copied().unwrap_or(0) == target.edge_multiplicity(w, u)
                    && inc.get(&(v, u)).copied().unwrap_or(0) == target.edge_multiplicity(u, w)
            })
        })
    }
}

/// Chip pushforward `Z^{V(Γ)∖s} → Z^{V(Γ')∖s'}`.
fn pushforward(source: &Digraph, target: &Digraph, vertex_map: &[usize], s: usize, t: usize) -> IntMatrix {
    let src = non_sink(source, s);
    let tgt = non_sink(target, t);
    let mut f = IntMatrix::zeros(tgt.len(), src.len());
    for (i, &v) in src.iter().enumerate() {
        if let Some(j) = tgt.iter().position(|&w| w == vertex_map[v]) {
            f[(j, i)] = BigInt::one();
        }
    }
    f
}

/// The covering `Cay(Ĝ, S_V) → Cay(Ĥ, S_{Res V})`, `χ ↦ Res χ`, with the
/// map it induces on critical groups. Errors if the covering check fails,
/// the induced map is not onto, or it disagrees with `Res‾`.
pub fn cayley_covering(
    g: &CharacterTable,
    h: &CharacterTable,
    fusion: &ClassFusion,
    v: &RepVector,
) -> Result<(CoveringMap, CokernelMap)> {
    let source = cayley_graph(g, v)?;
    let res_v = restrict_rep(g, h, fusion, v)?;
    let target = cayley_graph(h, &res_v)?;
    let res = restriction_matrix(g, h, fusion)?;
    let vertex_map = (0..g.num_irreps())
        .map(|i| {
            let col = res.column(i);
            let hits: Vec<usize> = (0..col.len()).filter(|&k| !col[k].is_zero()).collect();
            match hits.as_slice() {
                [k] if col[*k].is_one() => Ok(*k),
                _ => Err(Error::Internal(format!(
                    "restriction of {} is not a linear character",
                    g.irreps()[i]
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if !CoveringMap::check(&source, &target, &vertex_map) {
        return Err(Error::Internal("χ ↦ Res χ is not a covering".into()));
    }
    let (s, t) = (g.trivial_index(), h.trivial_index());
    let m = reduced_laplacian(&source, Some(s))?.transpose();
    let n = reduced_laplacian(&target, Some(t))?.transpose();
    let f = pushforward(&source, &target, &vertex_map, s, t);
    let map = induced_cokernel_map(&f, &m, &n)?;
    if !map.surjective {
        return Err(Error::Internal("covering-induced map is not surjective".into()));
    }
    let res_map = res_map_on_critical_groups(g, h, fusion, v)?;
    let diff = f.sub(&res_map.ambient)?;
    if m != reduced_critical_matrix(g, v)?
        || n != reduced_critical_matrix(h, &res_v)?
        || solve_integer(&n, &diff)?.is_none()
    {
        return Err(Error::NonCommuting(
            "covering map and restriction disagree on critical groups".into(),
        ));
    }
    Ok((
        CoveringMap {
            source,
            target,
            vertex_map,
            verified: true,
        },
        map,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartables::{
        abelian_subgroup_fusion, build_abelian_table, critical_group, ctilde,
    };

    #[test]
    fn cycles() {
        let c5 = Digraph::undirected_cycle(5);
        assert_eq!(graph_critical_group(&c5, None).unwrap().factors_i64().unwrap(), vec![5]);
        assert_eq!(spanning_tree_count(&c5, None).unwrap(), BigInt::from(5));
        let l = laplacian(&c5);
        assert_eq!(l.row(0)[..2], [BigInt::from(2), BigInt::from(-1)]);
        for n in 2..=6 {
            let d = Digraph::directed_cycle(n);
            assert!(graph_critical_group(&d, None).unwrap().is_trivial());
            assert_eq!(spanning_tree_count(&d, None).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn loops_and_sinks() {
        let mut g = Digraph::new(vec!["a".into()]).unwrap();
        g.add_edge(0, 0, 3).unwrap();
        assert_eq!(laplacian(&g), IntMatrix::zeros(1, 1));
        let mut g = Digraph::new(vec!["a".into(), "b".into()]).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        assert!(graph_critical_group(&g, Some(0)).is_err());
        assert!(graph_critical_group(&g, Some(1)).unwrap().is_trivial());
        assert!(g.set_sink(5).is_err());
        assert!(reduced_laplacian(&g, None).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = r#"{"vertices":["a","b","c"],"edges":[["a","b",1],["b","c",2]],"sink":"a","undirected":true}"#;
        let g = Digraph::from_json(s).unwrap();
        assert_eq!(g.edge_multiplicity(2, 1), 2);
        assert_eq!(Digraph::from_json(&g.to_json()).unwrap(), g);
        assert!(Digraph::from_json(r#"{"vertices":["a"],"edges":[["a","z",1]]}"#).is_err());
        assert!(Digraph::from_json(r#"{"vertices":["a"],"edges":[],"sink":"q"}"#).is_err());
    }

    #[test]
    fn z6_cayley_graph() {
        let z6 = build_abelian_table(&[6]).unwrap();
        let v = RepVector::from_names(&z6, &["chi1", "chi3"]).unwrap();
        let g = cayley_graph(&z6, &v).unwrap();
        assert!((0..6).all(|i| g.out_degree(i) == 2 && g.in_degree(i) == 2));
        assert_eq!(g.edge_multiplicity(0, 1), 1);
        assert_eq!(g.edge_multiplicity(0, 3), 1);
        assert_eq!(g.edge_multiplicity(5, 0), 1);
        assert_eq!(laplacian(&g), ctilde(&z6, &v).unwrap());
        assert_eq!(
            graph_critical_group(&g, None).unwrap(),
            critical_group(&z6, &v).unwrap()
        );
    }

    #[test]
    fn z2_double_edges_and_regular() {
        let z2 = build_abelian_table(&[2]).unwrap();
        let v = RepVector::from_names(&z2, &["chi1", "chi1"]).unwrap();
        let g = cayley_graph(&z2, &v).unwrap();
        assert_eq!((g.edge_multiplicity(0, 1), g.edge_multiplicity(1, 0)), (2, 2));
        let z4 = build_abelian_table(&[4]).unwrap();
        let g = cayley_graph(&z4, &RepVector::regular(&z4)).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| g.edge_multiplicity(i, j) == 1)));
        let c = build_abelian_table(&[2, 2]).unwrap();
        assert!(cayley_graph(&crate::chartables::build_symmetric_table(3).unwrap(), &RepVector::zero(3)).is_err());
        assert!(cayley_graph(&c, &RepVector::zero(4)).is_ok());
    }

    #[test]
    fn z6_to_z2_covering() {
        let z6 = build_abelian_table(&[6]).unwrap();
        let z2 = build_abelian_table(&[2]).unwrap();
        let f = abelian_subgroup_fusion(&z6, &[6], &z2, &[2], &[vec![3]]).unwrap();
        let v = RepVector::from_names(&z6, &["chi1", "chi3"]).unwrap();
        let (cov, map) = cayley_covering(&z6, &z2, &f, &v).unwrap();
        assert!(cov.verified);
        let mut fibres = [0; 2];
        for &w in &cov.vertex_map {
            fibres[w] += 1;
        }
        assert_eq!(fibres, [3, 3]);
        assert!(map.surjective);
        assert_eq!(cov.target.edge_multiplicity(0, 1), 2);
    }

    #[test]
    fn identity_covering() {
        let g = build_abelian_table(&[2, 3]).unwrap();
        let v = RepVector::from_names(&g, &["chi(1,0)", "chi(0,1)"]).unwrap();
        let (cov, map) = cayley_covering(&g, &g, &ClassFusion::identity(&g), &v).unwrap();
        assert_eq!(cov.vertex_map, (0..6).collect::<Vec<_>>());
        assert!(map.is_identity());
    }

    #[test]
    fn covering_check_rejects_non_coverings() {
        let c4 = Digraph::directed_cycle(4);
        let c2 = Digraph::directed_cycle(2);
        assert!(CoveringMap::check(&c4, &c2, &[0, 1, 0, 1]));
        assert!(!CoveringMap::check(&c4, &c2, &[0, 0, 1, 1]));
    }
}
