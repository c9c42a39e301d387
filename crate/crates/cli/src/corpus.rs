//! The bundled example corpus: every document ships inside the binary so
//! `motivic selftest` runs without any files on disk. The same documents live
//! under `crates/cli/corpus/` for use from the command line.

pub const CUSP_POLY: &str = include_str!("../corpus/cusp.poly");
pub const NODE_POLY: &str = include_str!("../corpus/node.poly");
pub const PARABOLA_POLY: &str = include_str!("../corpus/parabola.poly");
pub const LINE_POLY: &str = include_str!("../corpus/line.poly");

pub const CUSP_ZETA: &str = include_str!("../corpus/cusp-zeta.json");
pub const NODE_ZETA: &str = include_str!("../corpus/node-zeta.json");
pub const FX_ZETA: &str = include_str!("../corpus/fx-zeta.json");
pub const CUSP_VOLUME: &str = include_str!("../corpus/cusp-volume.json");
pub const Z2XY_VOLUME: &str = include_str!("../corpus/z2xy-volume.json");
pub const XY_VOLUME: &str = include_str!("../corpus/xy-volume.json");
pub const BLOWUP_IDENTITY: &str = include_str!("../corpus/blowup-identity.json");
pub const Z2XY_STRINGY: &str = include_str!("../corpus/z2xy-stringy.json");
pub const FERMAT_STRINGY: &str = include_str!("../corpus/fermat-stringy.json");
pub const FERMAT_D3K2_STRINGY: &str = include_str!("../corpus/fermat-d3-k2-stringy.json");
pub const FERMAT_VOLUME: &str = include_str!("../corpus/fermat-volume.json");
pub const THREEFOLD_STRINGY_ZETA: &str = include_str!("../corpus/threefold-stringy-zeta.json");
pub const Z2XY_STRINGY_ZETA: &str = include_str!("../corpus/z2xy-stringy-zeta.json");
pub const NC_A1: &str = include_str!("../corpus/nc-a1.json");
pub const TRIANGLE_SEIFERT: &str = include_str!("../corpus/triangle-seifert.json");

/// Every bundled resolution document, by name.
pub fn resolution_documents() -> Vec<(&'static str, &'static str)> {
    vec![
        ("cusp-zeta", CUSP_ZETA),
        ("node-zeta", NODE_ZETA),
        ("fx-zeta", FX_ZETA),
        ("cusp-volume", CUSP_VOLUME),
        ("z2xy-volume", Z2XY_VOLUME),
        ("xy-volume", XY_VOLUME),
        ("blowup-identity", BLOWUP_IDENTITY),
        ("z2xy-stringy", Z2XY_STRINGY),
        ("fermat-stringy", FERMAT_STRINGY),
        ("fermat-d3-k2-stringy", FERMAT_D3K2_STRINGY),
        ("fermat-volume", FERMAT_VOLUME),
        ("threefold-stringy-zeta", THREEFOLD_STRINGY_ZETA),
        ("z2xy-stringy-zeta", Z2XY_STRINGY_ZETA),
        ("nc-a1", NC_A1),
    ]
}

/// Zeta-context documents (for pole-containment sweeps).
pub fn zeta_documents() -> Vec<(&'static str, &'static str)> {
    vec![("cusp-zeta", CUSP_ZETA), ("node-zeta", NODE_ZETA), ("fx-zeta", FX_ZETA)]
}

/// Stringy-context documents (for specialization-chain sweeps).
pub fn stringy_documents() -> Vec<(&'static str, &'static str)> {
    vec![
        ("z2xy-stringy", Z2XY_STRINGY),
        ("fermat-stringy", FERMAT_STRINGY),
        ("fermat-d3-k2-stringy", FERMAT_D3K2_STRINGY),
    ]
}

/// Everything bundled, for the input digest of `selftest`.
pub fn all_inputs() -> Vec<&'static str> {
    let mut out = vec![CUSP_POLY, NODE_POLY, PARABOLA_POLY, LINE_POLY];
    out.extend(resolution_documents().into_iter().map(|(_, d)| d));
    out.push(TRIANGLE_SEIFERT);
    out
}
