//! With strategies limited to beta = 0 the symmetric search settles on
//! mutual cooperation worth 3, which the full strategy space can still beat.

use qgame::equilibrium::{restricted_ne_search, verify_nash, SearchConfig};
use qgame::games::prisoners_dilemma;
use qgame::{EntanglementParam, GameSpec, Strategy, Su2Params};

fn main() -> qgame::Result<()> {
    let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal())?;
    let cfg = SearchConfig::default();
    let r = restricted_ne_search(&spec, &cfg)?;
    if let Strategy::Pure(u) = r.profile.strategy(0) {
        if let Some(p) = Su2Params::from_unitary(u) {
            println!(
                "both play U({:.4}, {:.4}, {:.4})",
                p.theta(),
                p.alpha(),
                p.beta()
            );
        }
    }
    println!(
        "payoffs {:?}, beta = 0 gains {:?}",
        r.payoffs, r.max_unilateral_gain
    );
    let full = verify_nash(&spec, &r.profile, &cfg)?;
    println!("gains over all of SU(2): {:?}", full.max_unilateral_gain);
    Ok(())
}
