use crate::graph::{apply_word, BicoloredGraph, GraphError, UpdateWord, VertexId};

/// One Local Homophily Evaluation question: is `st` an edge after Φ_w?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LheInstance {
    pub graph: BicoloredGraph,
    pub s: VertexId,
    pub t: VertexId,
    pub word: UpdateWord,
}

impl LheInstance {
    pub fn new(graph: BicoloredGraph, s: VertexId, t: VertexId, word: UpdateWord) -> Result<Self, GraphError> {
        let inst = LheInstance { graph, s, t, word };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        self.graph.check_vertex(self.s)?;
        self.graph.check_vertex(self.t)?;
        if self.s == self.t {
            return Err(GraphError::DegenerateTarget(self.s));
        }
        for v in self.word.iter() {
            self.graph.check_vertex(v)?;
        }
        Ok(())
    }
}

/// Decides the instance by running the word.
pub fn solve_lhe(instance: &LheInstance) -> Result<bool, GraphError> {
    instance.validate()?;
    let last = apply_word(&instance.graph, &instance.word)?;
    Ok(last.has_edge(instance.s, instance.t))
}
