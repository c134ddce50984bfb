//! Catalog entries for the almost-simple and 2-homogeneous checks.

use crate::budget::Budgets;
use crate::constructors::{
    agammal1, agl, alternating, asl, asl1_squares, aut_psl3_on_points_and_lines, case5_witnesses, pgammal, pgl, psl,
    symmetric,
};
use crate::error::Result;
use crate::group::PermGroup;
use crate::integrability::{AutCatalogEntry, TwoHomogCatalogEntry};
use crate::normalizer::{normalizer_in, Strategy};
use crate::structure::unique_minimal_normal;
use crate::subgroups::intermediate_subgroups;

/// `(A5, S5)`, `(A6, PΓL2(9))`, `(PSL2(7), PGL2(7))` and `(PSL2(11), PGL2(11))`.
pub fn aut_catalog() -> Result<Vec<AutCatalogEntry>> {
    Ok(vec![
        AutCatalogEntry { name: "A5".into(), socle: alternating(5)?, aut: symmetric(5)? },
        AutCatalogEntry { name: "A6".into(), socle: psl(2, 9)?, aut: pgammal(2, 9)? },
        AutCatalogEntry { name: "PSL2(7)".into(), socle: psl(2, 7)?, aut: pgl(2, 7)? },
        AutCatalogEntry { name: "PSL2(11)".into(), socle: psl(2, 11)?, aut: pgl(2, 11)? },
    ])
}

/// `PSL3(7) ≤ Aut(PSL3(7))` on 114 points and lines.
pub fn aut_psl37_entry() -> Result<AutCatalogEntry> {
    let pl = aut_psl3_on_points_and_lines(7)?;
    Ok(AutCatalogEntry { name: "PSL3(7)".into(), socle: pl.socle, aut: pl.aut })
}

/// The groups strictly between `A6` and `PΓL2(9)` on 10 points, named by
/// element orders: `PGL2(9)` has elements of order 10, `S6` of order 6, and
/// `M10` neither.
pub fn degree10_layer(budgets: &Budgets) -> Result<Vec<(String, PermGroup)>> {
    let a6 = psl(2, 9)?;
    let top = pgammal(2, 9)?;
    let mut out = Vec::new();
    for g in intermediate_subgroups(&top, &a6, budgets)? {
        let name = if g.order() == 360 {
            "A6".to_string()
        } else if g.order() == 1440 {
            "PΓL2(9)".to_string()
        } else {
            let orders = element_orders(&g, budgets.elements)?;
            if orders.contains(&10) {
                "PGL2(9)".to_string()
            } else if orders.contains(&6) {
                "S6".to_string()
            } else {
                "M10".to_string()
            }
        };
        out.push((name, g));
    }
    Ok(out)
}

fn element_orders(g: &PermGroup, budget: usize) -> Result<Vec<u64>> {
    let mut v: Vec<u64> = g.elements(budget)?.iter().map(|x| x.order()).collect();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

fn entry(name: &str, case: u32, group: PermGroup, overgroup: &PermGroup, budgets: &Budgets) -> Result<TwoHomogCatalogEntry> {
    let socle = unique_minimal_normal(&group, budgets.elements)?.ok_or_else(|| {
        crate::error::Error::InvalidParameter(format!("{name} has no unique minimal normal subgroup"))
    })?;
    entry_with_socle(name, case, group, socle, overgroup, budgets)
}

fn entry_with_socle(
    name: &str,
    case: u32,
    group: PermGroup,
    socle: PermGroup,
    overgroup: &PermGroup,
    budgets: &Budgets,
) -> Result<TwoHomogCatalogEntry> {
    let sym = symmetric(group.degree())?;
    let (normalizer, provenance) = normalizer_in(&sym, &socle, Strategy::Auto, budgets)?;
    Ok(TwoHomogCatalogEntry { name: name.into(), case, group, socle, normalizer, provenance, overgroup: overgroup.clone() })
}

/// 2-homogeneous groups of degree at most 57 used by the interval checks.
/// Case 1 entries are the ones that are not 2-transitive. The case 5 entries
/// are the rows of the extraspecial exception table.
pub fn two_homog_catalog(budgets: &Budgets) -> Result<Vec<TwoHomogCatalogEntry>> {
    let w = case5_witnesses()?;
    let agl23 = agl(2, 3)?;
    let mut v = vec![
        entry("7:3", 1, asl1_squares(7)?, &agammal1(7)?, budgets)?,
        entry("11:5", 1, asl1_squares(11)?, &agammal1(11)?, budgets)?,
        entry("27:13", 1, asl1_squares(27)?, &agammal1(27)?, budgets)?,
        entry("AΓL1(27)", 2, agammal1(27)?, &agammal1(27)?, budgets)?,
        entry("AGL2(3)", 2, agl23.clone(), &agl23, budgets)?,
        entry("3^2:Q8", 5, w.q3_q8, &agl23, budgets)?,
        entry("ASL2(3)", 5, asl(2, 3)?, &agl23, budgets)?,
        entry("5^2:SL2(3)", 5, w.q5_sl2_3, &w.q5_normalizer, budgets)?,
    ];
    let a6 = psl(2, 9)?;
    let top = pgammal(2, 9)?;
    for (name, g) in degree10_layer(budgets)? {
        v.push(entry_with_socle(&name, 11, g, a6.clone(), &top, budgets)?);
    }
    let s = psl(3, 7)?;
    let g = pgl(3, 7)?;
    v.push(entry_with_socle("PGL3(7)", 11, g.clone(), s, &g, budgets)?);
    Ok(v)
}
