//! Loading and validation of the shipped lattice constants.
//!
//! Matrices ship as versioned JSON with integer entries. Defaults are
//! compiled in; `LATTICE_DATA_DIR` overrides the directory at runtime.

use lattice_core::mat::IMat;
use serde::Deserialize;

#[derive(Deserialize)]
struct MatrixFile {
    #[allow(dead_code)]
    name: String,
    version: u32,
    rows: Vec<Vec<i64>>,
}

const LEECH_BASIS: &str = include_str!("../../../data/leech_basis.json");
const SX_EMBEDDING: &str = include_str!("../../../data/sx_embedding.json");
const ENRIQUES_INVOLUTION: &str = include_str!("../../../data/enriques_involution.json");
const SX_PLUS_BASIS: &str = include_str!("../../../data/sx_plus_basis.json");

fn load_matrix(file_name: &str, embedded: &str) -> IMat {
    let text = match std::env::var("LATTICE_DATA_DIR") {
        Ok(dir) => std::fs::read_to_string(std::path::Path::new(&dir).join(file_name))
            .unwrap_or_else(|e| panic!("reading {file_name} from LATTICE_DATA_DIR: {e}")),
        Err(_) => embedded.to_string(),
    };
    let parsed: MatrixFile =
        serde_json::from_str(&text).unwrap_or_else(|e| panic!("parsing {file_name}: {e}"));
    assert_eq!(parsed.version, 1, "{file_name}: unsupported version");
    IMat::from_rows(&parsed.rows)
}

pub fn leech_basis() -> IMat {
    let m = load_matrix("leech_basis.json", LEECH_BASIS);
    assert_eq!((m.rows, m.cols), (24, 24), "leech basis must be 24x24");
    m
}

pub fn sx_embedding() -> IMat {
    let m = load_matrix("sx_embedding.json", SX_EMBEDDING);
    assert_eq!((m.rows, m.cols), (16, 26), "embedding must be 16x26");
    m
}

pub fn enriques_involution_matrix() -> IMat {
    let m = load_matrix("enriques_involution.json", ENRIQUES_INVOLUTION);
    assert_eq!((m.rows, m.cols), (16, 16));
    m
}

pub fn sx_plus_basis() -> IMat {
    let m = load_matrix("sx_plus_basis.json", SX_PLUS_BASIS);
    assert_eq!((m.rows, m.cols), (10, 16));
    m
}
