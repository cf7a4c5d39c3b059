use super::{ReductionArtifact, ReductionError, ReductionKind, ReductionSource};
use crate::graph::Graph;
use crate::model::{connects, realize, SpectrumAssignment};

fn require_connecting(art: &ReductionArtifact, witness: &SpectrumAssignment) -> Result<(), ReductionError> {
    if connects(&art.network, witness) {
        Ok(())
    } else {
        Err(ReductionError::NotConnecting)
    }
}

fn source_graph(art: &ReductionArtifact) -> &Graph {
    match &art.source {
        ReductionSource::Graph(g) => g,
        ReductionSource::Formula(_) => unreachable!("graph reductions carry their graph"),
    }
}

/// Truth assignment from a connecting witness of a SAT construction: `x_i` is true iff `X_i`
/// opens channel 1. A variable user opening neither 0 nor 1 is read as false.
pub fn extract_sat(
    art: &ReductionArtifact,
    witness: &SpectrumAssignment,
) -> Result<Vec<bool>, ReductionError> {
    let ReductionSource::Formula(f) = &art.source else {
        return Err(ReductionError::WrongKind(art.kind));
    };
    if !matches!(art.kind, ReductionKind::UniformSat { .. } | ReductionKind::TwoChannel) {
        return Err(ReductionError::WrongKind(art.kind));
    }
    require_connecting(art, witness)?;
    let n = f.formula().variable_count();
    let assignment: Vec<bool> = witness.opened[..n].iter().map(|s| s.contains(1)).collect();
    if !f.formula().evaluate(&assignment) {
        return Err(ReductionError::ExtractionFailed(format!(
            "assignment {assignment:?} does not satisfy the formula"
        )));
    }
    Ok(assignment)
}

/// Vertex sequence of a Hamiltonian path. The realized graph has maximum degree 2 and is
/// connected, so it is a path or a cycle; a cycle is cut open after its first vertex.
pub fn extract_hamiltonian(
    art: &ReductionArtifact,
    witness: &SpectrumAssignment,
) -> Result<Vec<usize>, ReductionError> {
    if art.kind != ReductionKind::Hamiltonian {
        return Err(ReductionError::WrongKind(art.kind));
    }
    require_connecting(art, witness)?;
    let g = source_graph(art);
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let rg = realize(&art.network, witness).map_err(|_| ReductionError::NotConnecting)?;
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &rg.realized_edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    if let Some(v) = (0..n).find(|&v| adj[v].len() > 2) {
        return Err(ReductionError::ExtractionFailed(format!("vertex {v} has degree above 2")));
    }
    let start = (0..n).find(|&v| adj[v].len() <= 1).unwrap_or(0);
    let mut path = vec![start];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| !seen[w]) {
        seen[next] = true;
        path.push(next);
        cur = next;
    }
    if path.len() != n || path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(ReductionError::ExtractionFailed(format!(
            "{path:?} is not a Hamiltonian path of the source graph"
        )));
    }
    Ok(path)
}

/// The vertices whose channels the center `M` opens.
pub fn extract_vertex_cover(
    art: &ReductionArtifact,
    witness: &SpectrumAssignment,
) -> Result<Vec<usize>, ReductionError> {
    let ReductionKind::VertexCover { r } = art.kind else {
        return Err(ReductionError::WrongKind(art.kind));
    };
    require_connecting(art, witness)?;
    let g = source_graph(art);
    let center = art.network.user_count() - 1;
    let cover: Vec<usize> = witness.opened[center].iter().collect();
    let uncovered = g
        .edges()
        .iter()
        .find(|&&(u, v)| !cover.contains(&u) && !cover.contains(&v));
    if cover.len() > r || uncovered.is_some() {
        return Err(ReductionError::ExtractionFailed(format!(
            "{cover:?} is not a vertex cover of size at most {r}"
        )));
    }
    Ok(cover)
}
