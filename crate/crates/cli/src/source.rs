use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use paintability::graph::{make_family, Graph};

use crate::{precondition, Failure};

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphArgs {
    /// Named family: cycle:7, path:6, theta:2,2,4, dumbbell:4,1,4, k2n:4,
    /// tadpole:3,5, complete:4.
    #[arg(long)]
    family: Option<String>,

    /// A graph6 string, or "-" to read one graph6 per line from stdin.
    #[arg(long)]
    graph6: Option<String>,

    /// An edge-list file, or a file of graph6 lines; "-" reads stdin.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl GraphArgs {
    /// Whether the source may yield several graphs.
    pub fn is_stream(&self) -> bool {
        self.graph6.as_deref() == Some("-")
            || self.file.as_deref().is_some_and(|p| p.as_os_str() == "-")
    }

    pub fn load(&self) -> Result<Vec<Graph>, Failure> {
        if let Some(spec) = &self.family {
            return Ok(vec![make_family(spec).map_err(precondition)?]);
        }
        if let Some(s) = &self.graph6 {
            if s == "-" {
                return graph6_lines(&read_stdin()?);
            }
            return Ok(vec![Graph::from_graph6(s).map_err(precondition)?]);
        }
        let path = self.file.as_ref().expect("clap enforces one source");
        let text = if path.as_os_str() == "-" {
            read_stdin()?
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))?
        };
        match Graph::from_edge_list(&text) {
            Ok(g) => Ok(vec![g]),
            Err(edge_err) => graph6_lines(&text).map_err(|_| precondition(edge_err)),
        }
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(precondition)?;
    Ok(text)
}

fn graph6_lines(text: &str) -> Result<Vec<Graph>, Failure> {
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != ">>graph6<<")
        .map(Graph::from_graph6)
        .collect::<Result<Vec<_>, _>>()
        .map_err(precondition)?;
    if graphs.is_empty() {
        return Err(Failure::Precondition("no graphs in input".into()));
    }
    Ok(graphs)
}
