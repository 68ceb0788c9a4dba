//! Entanglement doubles the four-player minority payoff and does nothing
//! for three players.

use qgame::equilibrium::{minority_quantum_search, SearchConfig};
use qgame::games::{classical_random_payoff, minority_game};

fn main() -> qgame::Result<()> {
    let cfg = SearchConfig::default();
    for n in [3, 4] {
        let classical = classical_random_payoff(&minority_game(n)?)[0];
        let q = minority_quantum_search(n, &cfg)?;
        println!(
            "N = {n}: classical {classical:.4}, quantum {:.4}, equilibrium: {}",
            q.payoffs[0], q.is_nash
        );
    }
    Ok(())
}
