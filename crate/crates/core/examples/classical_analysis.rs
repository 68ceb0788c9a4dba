use qgame::games::{
    find_dominant_strategies, find_pure_nash, is_ess_2x2, is_prisoners_dilemma, matching_pennies,
    minority_game, pareto_optimal_outcomes, prisoners_dilemma, saddle_point, ClassicalMatrix,
    DEFECT,
};

fn main() -> qgame::Result<()> {
    let pd = prisoners_dilemma();
    println!("prisoners' dilemma: {}", is_prisoners_dilemma(&pd)?);
    println!("  dominant moves {:?}", find_dominant_strategies(&pd));
    println!("  pure equilibria {:?}", find_pure_nash(&pd));
    println!("  Pareto optimal {:?}", pareto_optimal_outcomes(&pd));
    println!(
        "  defection is evolutionarily stable: {}",
        is_ess_2x2(&pd, DEFECT, 1 - DEFECT)?
    );

    println!(
        "matching pennies saddle point: {:?}",
        saddle_point(&matching_pennies())?
    );
    let with_saddle = ClassicalMatrix::bimatrix(
        &[vec![3.0, 1.0], vec![4.0, 2.0]],
        &[vec![-3.0, -1.0], vec![-4.0, -2.0]],
    )?;
    println!(
        "dominated zero-sum game saddle point: {:?}",
        saddle_point(&with_saddle)?
    );

    let m = minority_game(4)?;
    println!(
        "four-player minority game: {} pure equilibria",
        find_pure_nash(&m).len()
    );
    Ok(())
}
