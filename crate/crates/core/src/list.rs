//! The list abstraction: 1-based positions, access costs under the full and
//! partial cost models, and the free-exchange move primitives the policies
//! are built from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A list item, identified by the 1-based position it held in the initial
/// list: the item starting at position `i` has id `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Item(pub u32);

impl Item {
    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How an access at a given position is charged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CostModel {
    /// Accessing the item at position `i` costs `i`.
    Full,
    /// Accessing the item at position `i` costs `i - 1` comparisons.
    Partial,
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostModel::Full => f.write_str("full"),
            CostModel::Partial => f.write_str("partial"),
        }
    }
}

/// Cost of accessing the item at a 1-based `position`.
pub fn access_cost(position: usize, model: CostModel) -> Result<u64> {
    if position < 1 {
        return Err(Error::InvalidPosition(position));
    }
    Ok(match model {
        CostModel::Full => position as u64,
        CostModel::Partial => (position - 1) as u64,
    })
}

/// An ordered list of `n` distinct items, always a permutation of `1..=n`.
/// Positions are 1-based; the front of the list is position 1.
///
/// Every move operation is a free exchange: it only moves an item toward the
/// front and costs nothing under either cost model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListState {
    order: Vec<Item>,
}

impl ListState {
    /// The initial configuration `(1, 2, ..., n)`.
    pub fn initial(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParam("list size must be at least 1".into()));
        }
        Ok(ListState {
            order: (1..=n as u32).map(Item).collect(),
        })
    }

    /// Build a list from an explicit order. The items must be exactly
    /// `1..=n` in some arrangement, `n` being the number of items given.
    pub fn from_items(order: Vec<Item>) -> Result<Self> {
        let n = order.len();
        if n < 1 {
            return Err(Error::InvalidParam("list size must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &item in &order {
            let id = item.0 as usize;
            if id < 1 || id > n {
                return Err(Error::RangeError { id: item.0, n });
            }
            if seen[id - 1] {
                return Err(Error::DuplicateItems(item));
            }
            seen[id - 1] = true;
        }
        Ok(ListState { order })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn items(&self) -> &[Item] {
        &self.order
    }

    /// 1-based position of `item`, scanning from the front.
    pub fn position_of(&self, item: Item) -> Result<usize> {
        self.order
            .iter()
            .position(|&it| it == item)
            .map(|idx| idx + 1)
            .ok_or(Error::ItemNotFound(item))
    }

    /// Item at a 1-based `position`.
    pub fn item_at(&self, position: usize) -> Result<Item> {
        if position < 1 || position > self.order.len() {
            return Err(Error::InvalidPosition(position));
        }
        Ok(self.order[position - 1])
    }

    /// Move the item at `position` to the front; everything it passes shifts
    /// back by one.
    pub fn move_to_front(&mut self, position: usize) -> Result<()> {
        if position < 1 || position > self.order.len() {
            return Err(Error::InvalidPosition(position));
        }
        self.order[..position].rotate_right(1);
        Ok(())
    }

    /// Swap the item at `position` with its immediate predecessor. A no-op at
    /// the front.
    pub fn transpose_forward(&mut self, position: usize) -> Result<()> {
        if position < 1 || position > self.order.len() {
            return Err(Error::InvalidPosition(position));
        }
        if position > 1 {
            self.order.swap(position - 1, position - 2);
        }
        Ok(())
    }

    /// Move the item at `position` forward to `target`; items formerly at
    /// `target..position` shift back by one.
    pub fn move_forward_to(&mut self, position: usize, target: usize) -> Result<()> {
        if position < 1 || position > self.order.len() {
            return Err(Error::InvalidPosition(position));
        }
        if target < 1 || target > position {
            return Err(Error::InvalidPosition(target));
        }
        self.order[target - 1..position].rotate_right(1);
        Ok(())
    }
}

impl fmt::Display for ListState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, item) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{item}")?;
        }
        f.write_str(")")
    }
}
