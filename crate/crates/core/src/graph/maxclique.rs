//! Maximum clique by branch and bound with greedy-colouring bounds.

use super::bits;
use super::census::CensusOptions;
use super::Graph;
use crate::error::{Error, Result};

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Greedy sequential colouring of `p`; returns vertices in colour order
    /// with the colour number of each (colours start at 1).
    fn colour_sort(&self, p: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = p.to_vec();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut colour = 0;
        let mut q = vec![0u64; p.len()];
        while !bits::is_empty(&uncoloured) {
            colour += 1;
            q.copy_from_slice(&uncoloured);
            while let Some(v) = bits::ones(&q).next() {
                bits::clear(&mut q, v);
                bits::clear(&mut uncoloured, v);
                for (x, &r) in q.iter_mut().zip(self.g.row(v)) {
                    *x &= !r;
                }
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut p: Vec<u64>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        let (order, colours) = self.colour_sort(&p);
        let mut next = vec![0u64; p.len()];
        for i in (0..order.len()).rev() {
            if clique.len() + colours[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            clique.push(v);
            bits::and_into(&mut next, &p, self.g.row(v));
            if bits::is_empty(&next) {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next.clone())?;
            }
            clique.pop();
            bits::clear(&mut p, v);
        }
        Ok(())
    }
}

/// A maximum clique (vertex list, increasing).
pub fn max_clique(g: &Graph, opts: &CensusOptions) -> Result<Vec<usize>> {
    if g.is_t() {
        return Err(Error::LoopGraph("maximum clique (T has cliques of every size)"));
    }
    let mut s = Search {
        g,
        best: Vec::new(),
        nodes: 0,
        budget: opts.node_budget,
    };
    s.expand(&mut Vec::new(), bits::full(g.n()))?;
    let mut best = s.best;
    best.sort_unstable();
    Ok(best)
}

pub fn max_clique_order(g: &Graph, opts: &CensusOptions) -> Result<usize> {
    max_clique(g, opts).map(|c| c.len())
}
