//! The bundled fixture algebras.

use crate::algebra::Caps;
use crate::error::Result;
use crate::workspace::{Loaded, Workspace};

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    /// `dim Λ`, counted by hand from the normal-form paths.
    pub dim: usize,
    /// Named modules forming the complete list of indecomposables, when the
    /// algebra is representation-finite and small enough to list.
    pub indecomposables: Option<&'static [&'static str]>,
    pub semiperfect: bool,
}

impl Fixture {
    pub fn load(&self) -> Result<Loaded> {
        Workspace::load(self.text, Caps::default())
    }
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "a2",
        text: include_str!("../fixtures/a2.quiver"),
        dim: 3,
        indecomposables: Some(&["S1", "S2", "P1"]),
        semiperfect: true,
    },
    Fixture {
        name: "bound_a3",
        text: include_str!("../fixtures/bound_a3.quiver"),
        dim: 5,
        indecomposables: Some(&["S1", "S2", "S3", "P1", "P2"]),
        semiperfect: true,
    },
    Fixture {
        name: "hereditary_a3",
        text: include_str!("../fixtures/hereditary_a3.quiver"),
        dim: 6,
        indecomposables: Some(&["S1", "S2", "S3", "M12", "M23", "P1"]),
        semiperfect: true,
    },
    Fixture {
        name: "kronecker",
        text: include_str!("../fixtures/kronecker.quiver"),
        dim: 4,
        indecomposables: None,
        semiperfect: true,
    },
    Fixture {
        name: "loop_idempotent",
        text: include_str!("../fixtures/loop_idempotent.quiver"),
        dim: 3,
        indecomposables: Some(&["S", "U", "T"]),
        semiperfect: false,
    },
    Fixture {
        name: "dual_numbers",
        text: include_str!("../fixtures/dual_numbers.quiver"),
        dim: 2,
        indecomposables: Some(&["S", "P"]),
        semiperfect: true,
    },
    Fixture {
        name: "window_multiserial",
        text: include_str!("../fixtures/window_multiserial.quiver"),
        dim: 29,
        indecomposables: None,
        semiperfect: true,
    },
    Fixture {
        name: "window_unbounded",
        text: include_str!("../fixtures/window_unbounded.quiver"),
        dim: 20,
        indecomposables: None,
        semiperfect: true,
    },
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_load_with_expected_dims() {
        for f in FIXTURES {
            let l = f.load().unwrap();
            assert_eq!(l.algebra.dim(), f.dim, "{}", f.name);
            assert_eq!(l.algebra.locally_semiperfect().value.is_true(), f.semiperfect, "{}", f.name);
            for name in f.indecomposables.unwrap_or(&[]) {
                l.module(name).unwrap();
            }
            assert_eq!(Workspace::parse(&l.workspace.print()).unwrap(), l.workspace);
        }
    }
}
