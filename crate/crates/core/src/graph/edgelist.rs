use super::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected two vertex ids")]
    Malformed { line: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("edge list has no edges")]
    NoEdges,
}

/// Parse the edge-list text format: one `u v` pair per line, 0-based ids,
/// whitespace separated, `#` starts a comment. The vertex count is one more
/// than the largest id mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((i + 1, u, v)),
            _ => return Err(EdgeListError::Malformed { line: i + 1 }),
        }
    }
    let n = edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().ok_or(EdgeListError::NoEdges)?;
    let mut g = Graph::new(n).map_err(|source| EdgeListError::Graph { line: 0, source })?;
    for (line, u, v) in edges {
        g.add_edge(u, v).map_err(|source| EdgeListError::Graph { line, source })?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n0 1\n1 2 # closing soon\n\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn rejects_bad_lines() {
        assert_eq!(parse_edge_list("0 1\n1\n"), Err(EdgeListError::Malformed { line: 2 }));
        assert_eq!(parse_edge_list("0 x\n"), Err(EdgeListError::Malformed { line: 1 }));
        assert_eq!(
            parse_edge_list("0 1\n2 2\n"),
            Err(EdgeListError::Graph { line: 2, source: GraphError::SelfLoop(2) })
        );
        assert_eq!(parse_edge_list("# nothing\n"), Err(EdgeListError::NoEdges));
    }
}
