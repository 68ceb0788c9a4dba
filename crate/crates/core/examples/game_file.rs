//! Loading a game from JSON and rendering an experiment as CSV and JSON.

use qgame::experiment::{emit, parse_game_file, run_experiment, Flags, Format};

const GAME: &str = r#"{
  "players": 2,
  "moves": [2, 2],
  "payoffs": [[3, 3], [0, 5], [5, 0], [1, 1]],
  "variant": "eisert",
  "gamma": 0.3
}"#;

fn main() -> qgame::Result<()> {
    let flags = Flags {
        game: Some(parse_game_file(GAME)?),
        points: Some(5),
        ..Flags::default()
    };
    let result = run_experiment("miracle-curve", &flags)?;
    print!("{}", emit(&result, Format::Csv)?);
    print!(
        "{}",
        emit(&run_experiment("analyze", &flags)?, Format::Json)?
    );
    Ok(())
}
