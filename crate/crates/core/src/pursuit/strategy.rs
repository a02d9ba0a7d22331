use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::VertexSet;

/// A cop strategy for the visible-robber games: maps a cop position
/// (placement, robber vertex) to the next placement.
pub trait CopStrategy {
    fn next_placement(&self, cops: &VertexSet, robber: usize) -> Option<VertexSet>;
}

impl<F> CopStrategy for F
where
    F: Fn(&VertexSet, usize) -> Option<VertexSet>,
{
    fn next_placement(&self, cops: &VertexSet, robber: usize) -> Option<VertexSet> {
        self(cops, robber)
    }
}

/// Lookup-table strategy, as extracted from an exact solve.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PositionalStrategy {
    moves: BTreeMap<(VertexSet, usize), VertexSet>,
}

impl PositionalStrategy {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, cops: VertexSet, robber: usize, next: VertexSet) {
        self.moves.insert((cops, robber), next);
    }

    pub fn get(&self, cops: &VertexSet, robber: usize) -> Option<&VertexSet> {
        // BTreeMap lookups need an owned key here; positions are small.
        self.moves.get(&(cops.clone(), robber))
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexSet, usize, &VertexSet)> {
        self.moves.iter().map(|((c, v), next)| (c, *v, next))
    }
}

impl CopStrategy for PositionalStrategy {
    fn next_placement(&self, cops: &VertexSet, robber: usize) -> Option<VertexSet> {
        self.get(cops, robber).cloned()
    }
}

/// Why replaying a cop strategy failed, with the offending position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayFailure {
    #[error("no move prescribed at cops {cops:?}, robber {robber}")]
    MissingMove { cops: Vec<usize>, robber: usize },
    #[error("illegal cop move at cops {cops:?}, robber {robber}: to {next:?}")]
    IllegalMove {
        cops: Vec<usize>,
        robber: usize,
        next: Vec<usize>,
    },
    #[error("non-monotone cop move at cops {cops:?}, robber {robber}: to {next:?}")]
    NonMonotone {
        cops: Vec<usize>,
        robber: usize,
        next: Vec<usize>,
    },
    #[error("cannot replay: {0}")]
    InvalidGame(String),
    #[error("robber forces an infinite play through cops {cops:?}, robber {robber}")]
    Cycle { cops: Vec<usize>, robber: usize },
}

pub(crate) fn ids(set: &VertexSet) -> Vec<usize> {
    set.iter().collect()
}

pub(crate) type Position = (VertexSet, usize);

/// Depth-first exploration of every play from `starts`, where `expand` lists
/// the cop positions the robber can move to next. Fails if some play can be
/// prolonged forever (a position repeats on the current path) or `expand`
/// rejects a position. Returns the number of positions visited.
pub(crate) fn explore_acyclic(
    starts: impl IntoIterator<Item = Position>,
    mut expand: impl FnMut(&Position) -> Result<Vec<Position>, ReplayFailure>,
) -> Result<usize, ReplayFailure> {
    use std::collections::HashMap;

    struct Frame {
        pos: Position,
        children: Vec<Position>,
        next: usize,
    }

    // true = finished, false = on the current path
    let mut marks: HashMap<Position, bool> = HashMap::new();
    let mut stack: Vec<Frame> = Vec::new();
    for start in starts {
        if marks.contains_key(&start) {
            continue;
        }
        let children = expand(&start)?;
        marks.insert(start.clone(), false);
        stack.push(Frame {
            pos: start,
            children,
            next: 0,
        });
        while let Some(top) = stack.last_mut() {
            if top.next < top.children.len() {
                let child = top.children[top.next].clone();
                top.next += 1;
                match marks.get(&child) {
                    Some(true) => {}
                    Some(false) => {
                        return Err(ReplayFailure::Cycle {
                            cops: ids(&child.0),
                            robber: child.1,
                        })
                    }
                    None => {
                        let children = expand(&child)?;
                        marks.insert(child.clone(), false);
                        stack.push(Frame {
                            pos: child,
                            children,
                            next: 0,
                        });
                    }
                }
            } else {
                let done = stack.pop().expect("non-empty stack");
                marks.insert(done.pos, true);
            }
        }
    }
    Ok(marks.len())
}
