//! Size limits for the searches that grow quickly with the order.

/// Upper bounds applied by the exhaustive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest brace (or group) order accepted by lattice searches and
    /// automorphism enumeration.
    pub max_order: usize,
    /// Largest order of a group table built by product constructions, e.g.
    /// the `λ`-semidirect product of a brace (order `n²`).
    pub max_group_order: usize,
    /// Largest additive group order accepted by brace enumeration.
    pub max_enumeration_order: usize,
}

impl Bounds {
    pub const DEFAULT_MAX_ORDER: usize = 64;
    pub const DEFAULT_MAX_GROUP_ORDER: usize = 4096;
    pub const DEFAULT_MAX_ENUMERATION_ORDER: usize = 15;

    /// Same defaults, with a different `max_order`.
    pub fn with_max_order(max_order: usize) -> Self {
        Bounds {
            max_order,
            ..Bounds::default()
        }
    }

    pub(crate) fn check_order(&self, order: usize) -> crate::Result<()> {
        check(order, self.max_order)
    }

    pub(crate) fn check_group_order(&self, order: usize) -> crate::Result<()> {
        check(order, self.max_group_order)
    }

    pub(crate) fn check_enumeration_order(&self, order: usize) -> crate::Result<()> {
        check(order, self.max_enumeration_order)
    }
}

fn check(order: usize, bound: usize) -> crate::Result<()> {
    if order > bound {
        Err(crate::Error::BoundExceeded { order, bound })
    } else {
        Ok(())
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_order: Self::DEFAULT_MAX_ORDER,
            max_group_order: Self::DEFAULT_MAX_GROUP_ORDER,
            max_enumeration_order: Self::DEFAULT_MAX_ENUMERATION_ORDER,
        }
    }
}
