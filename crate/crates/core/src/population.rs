use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A feasible position together with its objective value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub position: Vec<f64>,
    pub objective: f64,
}

impl Candidate {
    pub fn new(position: Vec<f64>, objective: f64) -> Self {
        Self { position, objective }
    }
}

/// Ordered set of candidates with truncation survivor selection.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Population {
    members: Vec<Candidate>,
}

impl Population {
    pub fn new(members: Vec<Candidate>) -> Self {
        Self { members }
    }

    pub fn members(&self) -> &[Candidate] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn push(&mut self, c: Candidate) {
        self.members.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Candidate>) {
        self.members.extend(cs);
    }

    pub fn objectives(&self) -> Vec<f64> {
        self.members.iter().map(|c| c.objective).collect()
    }

    /// Lowest objective, first occurrence on ties.
    pub fn best(&self) -> Option<&Candidate> {
        self.members.iter().reduce(|best, c| if c.objective < best.objective { c } else { best })
    }

    /// Stable ascending sort by objective.
    pub fn sort_ascending(&mut self) {
        self.members.sort_by(|a, b| a.objective.total_cmp(&b.objective));
    }

    /// Keeps the `np` lowest-objective members, sorted ascending.
    pub fn select_survivors(&mut self, np: usize) -> Result<()> {
        if self.members.len() < np {
            return Err(Error::InsufficientPopulation { have: self.members.len(), need: np });
        }
        self.sort_ascending();
        self.members.truncate(np);
        Ok(())
    }

    pub fn into_members(self) -> Vec<Candidate> {
        self.members
    }
}

impl std::ops::Index<usize> for Population {
    type Output = Candidate;

    fn index(&self, i: usize) -> &Candidate {
        &self.members[i]
    }
}
