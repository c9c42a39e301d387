//! Shared fixtures for the counting benchmarks.

use motivic_core::jets::AffineSystem;

pub fn cusp() -> AffineSystem {
    AffineSystem::parse("x2^2 - x1^3").expect("valid system")
}

pub fn node() -> AffineSystem {
    AffineSystem::parse("x1*x2").expect("valid system")
}

pub fn whitney_umbrella() -> AffineSystem {
    AffineSystem::parse("x1^2 - x2^2*x3").expect("valid system")
}
