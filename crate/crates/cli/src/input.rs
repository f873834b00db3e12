use std::io::Read;
use std::path::Path;

use tourney_codes::tournament::{parse_catalog, parse_line};
use tourney_codes::{Error, Tournament};

/// Raw text of an input argument and the tournaments it holds.
pub struct Input {
    pub text: String,
    pub tournaments: Vec<Tournament>,
}

/// `-` reads stdin, an existing path reads the file, anything else is parsed
/// as a single tournament line.
pub fn load(arg: &str) -> Result<Input, Error> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
        s
    } else if Path::new(arg).is_file() {
        read_file(arg)?
    } else {
        let t = parse_line(arg)?;
        return Ok(Input { text: arg.to_string(), tournaments: vec![t] });
    };
    let tournaments = parse_catalog(&text)?;
    Ok(Input { text, tournaments })
}

pub fn read_file(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))
}

/// Exactly one tournament.
pub fn load_single(arg: &str) -> Result<Input, Error> {
    let input = load(arg)?;
    if input.tournaments.len() != 1 {
        return Err(Error::Input(format!(
            "expected one tournament, found {}",
            input.tournaments.len()
        )));
    }
    Ok(input)
}
