//! Optional externally-supplied chamber-moving isometries.
//!
//! The inner walls of the third and fourth type also admit isometries
//! carrying the chamber to its neighbour, but those are not derived here:
//! they can be loaded from a JSON file of integer matrices and are then
//! only verified (isometry, involution optional, adjacency certificate).
//! Nothing in the quotient-surface pipeline depends on them.

use crate::HessianContext;
use borcherds_engine::verify_adjacent;
use lattice_core::mat::IMat;
use lattice_core::Isometry;
use serde::Deserialize;

#[derive(Deserialize)]
pub struct ExternalIsometries {
    pub version: u32,
    /// Pairs (wall index, matrix rows).
    pub entries: Vec<(usize, Vec<Vec<i64>>)>,
}

/// Verify a file of candidate chamber-moving isometries against the
/// chamber. Returns the verified isometries with their wall indices.
pub fn load_and_verify(
    ctx: &HessianContext,
    json: &str,
) -> Result<Vec<(usize, Isometry)>, String> {
    let parsed: ExternalIsometries = serde_json::from_str(json).map_err(|e| e.to_string())?;
    if parsed.version != 1 {
        return Err("unsupported version".into());
    }
    let mut out = Vec::new();
    for (wall, rows) in parsed.entries {
        if wall >= ctx.dx.induced.chamber.pairings.len() {
            return Err(format!("wall index {wall} out of range"));
        }
        let m = IMat::from_rows(&rows);
        let iso = Isometry::new(&ctx.sx.lattice, m)
            .map_err(|e| format!("entry for wall {wall}: {e}"))?;
        if !verify_adjacent(&ctx.sx.lattice, &ctx.dx.induced.chamber, wall, &iso) {
            return Err(format!("entry for wall {wall} fails the adjacency certificate"));
        }
        out.push((wall, iso));
    }
    Ok(out)
}
