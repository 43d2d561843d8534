//! Edge-edit scripts: the replayable unit of graph perturbation.

use serde::Serialize;

use crate::error::Error;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EditOp {
    Add,
    Remove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edit {
    pub op: EditOp,
    pub u: usize,
    pub v: usize,
}

/// Ordered list of edge additions/removals. Replaying the script on the
/// source graph reproduces the transformed graph exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct EditScript {
    edits: Vec<Edit>,
}

impl EditScript {
    pub fn new() -> Self {
        EditScript::default()
    }

    pub(crate) fn push_add(&mut self, a: usize, b: usize) {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edits.push(Edit { op: EditOp::Add, u, v });
    }

    pub(crate) fn push_remove(&mut self, a: usize, b: usize) {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edits.push(Edit { op: EditOp::Remove, u, v });
    }

    pub fn edits(&self) -> &[Edit] {
        &self.edits
    }

    pub fn len(&self) -> usize {
        self.edits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edits.is_empty()
    }

    pub fn additions(&self) -> usize {
        self.edits.iter().filter(|e| e.op == EditOp::Add).count()
    }

    pub fn removals(&self) -> usize {
        self.edits.iter().filter(|e| e.op == EditOp::Remove).count()
    }

    /// Replay on `g`. Additions must hit non-edges and removals existing
    /// edges, otherwise the script does not belong to this graph.
    pub fn apply(&self, g: &Graph) -> Result<Graph, Error> {
        let mut current = g.clone();
        for edit in &self.edits {
            current = match edit.op {
                EditOp::Add => current.add_edge(edit.u, edit.v)?,
                EditOp::Remove => current.remove_edge(edit.u, edit.v)?,
            };
        }
        Ok(current)
    }
}
