use super::Individual;

/// Members sorted ascending by cost, plus the survivor-selection capacity.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    members: Vec<Individual>,
    capacity: usize,
}

impl Population {
    /// Sorts `members` by cost (stable, so equal costs keep their order).
    pub fn new(mut members: Vec<Individual>, capacity: usize) -> Self {
        members.sort_by(|a, b| a.cost.total_cmp(&b.cost));
        Population { members, capacity }
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Individual> {
        self.members
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn best(&self) -> Option<&Individual> {
        self.members.first()
    }

    pub fn worst(&self) -> Option<&Individual> {
        self.members.last()
    }

    pub fn get(&self, index: usize) -> Option<&Individual> {
        self.members.get(index)
    }

    /// The top `count` members.
    pub fn elite(&self, count: usize) -> &[Individual] {
        &self.members[..count.min(self.members.len())]
    }

    pub fn costs(&self) -> impl Iterator<Item = f64> + '_ {
        self.members.iter().map(|m| m.cost)
    }

    pub(super) fn truncate_to_capacity(&mut self) {
        self.members.truncate(self.capacity);
    }

    pub fn is_sorted(&self) -> bool {
        self.members.windows(2).all(|w| w[0].cost <= w[1].cost)
    }
}
