//! Validity of extraction results, checked from the definitions only.

use super::ExtractionResult;
use crate::colouring::EdgeColouring;
use crate::graph::Graph;

/// Checks that `res.classes` spans a (monochromatic, if `res.colour` is set)
/// blowup of `pattern` in `host`: disjoint nonempty classes, every pair
/// across adjacent classes an edge, and, when a cover is attached, every such
/// edge inside a member and `min(sizes)` disjoint members inside the result.
pub fn check_extraction(host: &Graph, pattern: &Graph, res: &ExtractionResult, colouring: Option<&EdgeColouring>) -> Result<(), String> {
    let k = pattern.vertex_count();
    if res.classes.len() != k || res.sizes.len() != k {
        return Err(format!("expected {k} classes"));
    }
    let mut seen = std::collections::HashSet::new();
    for (i, class) in res.classes.iter().enumerate() {
        if class.len() != res.sizes[i] {
            return Err(format!("class {i} has {} vertices, sizes say {}", class.len(), res.sizes[i]));
        }
        if class.is_empty() {
            return Err(format!("class {i} is empty"));
        }
        for &x in class {
            if x >= host.vertex_count() || !seen.insert(x) {
                return Err(format!("vertex {x} is out of range or repeated"));
            }
        }
    }
    for (i, j) in pattern.edges() {
        for &x in &res.classes[i] {
            for &y in &res.classes[j] {
                if !host.has_edge(x, y) {
                    return Err(format!("missing edge {x}-{y}"));
                }
                if let (Some(c), Some(col)) = (res.colour, colouring) {
                    if col.colour(x, y) != Some(c) {
                        return Err(format!("edge {x}-{y} is not colour {c}"));
                    }
                }
            }
        }
    }
    if let Some(cover) = &res.covered_by {
        let members = &cover.copies;
        let edge_set: std::collections::HashSet<(usize, usize)> = members
            .iter()
            .flat_map(|m| pattern.edges().into_iter().map(move |(i, j)| (m[i].min(m[j]), m[i].max(m[j]))))
            .collect();
        for (i, j) in pattern.edges() {
            for &x in &res.classes[i] {
                for &y in &res.classes[j] {
                    if !edge_set.contains(&(x.min(y), x.max(y))) {
                        return Err(format!("edge {x}-{y} lies in no member of the cover"));
                    }
                }
            }
        }
        let need = res.sizes.iter().copied().min().unwrap_or(0);
        let disjoint = &res.disjoint;
        if disjoint.len() < need {
            return Err(format!("{} disjoint members, need {need}", disjoint.len()));
        }
        let mut used = std::collections::HashSet::new();
        for d in disjoint {
            if !members.contains(d) {
                return Err("disjoint member outside the cover".into());
            }
            for (c, &x) in d.iter().enumerate() {
                if !res.classes[c].contains(&x) || !used.insert(x) {
                    return Err(format!("disjoint member vertex {x} misplaced or shared"));
                }
            }
        }
    }
    Ok(())
}
