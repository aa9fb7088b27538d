use std::fmt;

use serde::{Deserialize, Serialize};

use super::edge::{EdgeId, VertexId};
use super::pattern::PatternComponent;

/// One component laid out on host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub component: PatternComponent,
    pub vertices: Vec<VertexId>,
}

/// An embedding of a pattern into `K_n` that is claimed to be rainbow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub placements: Vec<Placement>,
    pub covered_edges: Vec<EdgeId>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.placements.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}[", p.component)?;
            for (j, v) in p.vertices.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}
