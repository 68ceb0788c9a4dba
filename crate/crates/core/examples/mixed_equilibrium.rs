//! The equal-weight mixed pair and members of its continuous family are
//! equilibria worth 2.5 each.

use qgame::equilibrium::{mixed_ne_family, mixed_ne_pair, verify_nash, SearchConfig};
use qgame::games::prisoners_dilemma;
use qgame::{EntanglementParam, GameSpec};

fn main() -> qgame::Result<()> {
    let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal())?;
    let cfg = SearchConfig::default();
    let mut profiles = vec![("pair".to_string(), mixed_ne_pair())];
    for (t, a, b) in [(0.7, 0.2, -1.0), (2.5, -2.0, 0.4)] {
        profiles.push((format!("family({t}, {a}, {b})"), mixed_ne_family(t, a, b)?));
    }
    for (name, profile) in profiles {
        let r = verify_nash(&spec, &profile, &cfg)?;
        println!(
            "{name}: payoffs {:?}, gains [{:.1e}, {:.1e}], equilibrium: {}",
            r.payoffs, r.max_unilateral_gain[0], r.max_unilateral_gain[1], r.is_nash
        );
    }
    Ok(())
}
