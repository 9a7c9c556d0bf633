use std::fs;
use std::io::Read;

use reflexive_core::gkm::{self, GkmGraph};
use reflexive_core::{catalog, io, Error, Polytope, Result};

pub enum Input {
    Polytope(Polytope),
    Graph(GkmGraph),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Polytope(_) => "polytope",
            Input::Graph(_) => "gkm-graph",
        }
    }

    pub fn polytope(self) -> Result<Polytope> {
        match self {
            Input::Polytope(p) => Ok(p),
            Input::Graph(_) => Err(Error::InvalidArgument("expected a polytope, got a graph".into())),
        }
    }

    /// Graphs pass through; Delzant reflexive polytopes become their
    /// skeleton graph.
    pub fn graph(self) -> Result<GkmGraph> {
        match self {
            Input::Graph(g) => Ok(g),
            Input::Polytope(p) => gkm::from_polytope(&p),
        }
    }

    /// Like [`Input::graph`], but any polytope becomes its plain skeleton.
    pub fn skeleton(self) -> GkmGraph {
        match self {
            Input::Graph(g) => g,
            Input::Polytope(p) => GkmGraph::skeleton(&p),
        }
    }
}

fn read_source(source: Option<&str>) -> Result<String> {
    match source {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("standard input: {e}")))?;
            Ok(s)
        }
        Some(path) => fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}"))),
    }
}

/// `catalog:NAME`, a file path, `-` or nothing (standard input).
pub fn load(source: Option<&str>) -> Result<Input> {
    if let Some(name) = source.and_then(|s| s.strip_prefix("catalog:")) {
        if catalog::POLYTOPES.contains(&name) {
            return catalog::polytope(name).map(Input::Polytope);
        }
        if catalog::GRAPHS.contains(&name) {
            return catalog::graph(name).map(Input::Graph);
        }
        return Err(Error::InvalidArgument(format!("unknown catalog entry {name}")));
    }
    let text = read_source(source)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("ambient_dim").is_some() {
        io::parse_graph(&text).map(Input::Graph)
    } else {
        io::parse_polytope(&text).map(Input::Polytope)
    }
}

pub fn read_text(source: Option<&str>) -> Result<String> {
    read_source(source)
}
