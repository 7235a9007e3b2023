use super::{Action, ActionDomain, ActionError};
use crate::carriers::{Endofunction, FiniteSet};

/// The binary function `β(g, x) = ḡ(x)` of an action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryActionTable {
    pub domain: ActionDomain,
    pub carrier: FiniteSet,
    /// `table[g][x] = β(g, x)`
    pub table: Vec<Vec<usize>>,
}

impl BinaryActionTable {
    pub fn from_action(a: &Action) -> Self {
        BinaryActionTable {
            domain: a.domain().clone(),
            carrier: a.carrier().clone(),
            table: a.maps().iter().map(|m| m.images().to_vec()).collect(),
        }
    }

    pub fn to_action(&self) -> Result<Action, ActionError> {
        let maps = self
            .table
            .iter()
            .map(|row| Endofunction::new(row.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        Action::new(self.domain.clone(), self.carrier.clone(), maps)
    }

    pub fn get(&self, g: usize, x: usize) -> usize {
        self.table[g][x]
    }
}

pub fn to_binary(a: &Action) -> BinaryActionTable {
    BinaryActionTable::from_action(a)
}

pub fn from_binary(b: &BinaryActionTable) -> Result<Action, ActionError> {
    b.to_action()
}
