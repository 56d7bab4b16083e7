use braid2d::search::Move;

/// Parses a whitespace-separated move script: `H<i>` (Hurwitz forward),
/// `H<i>'` (backward), `C<±j>` (conjugate by that generator letter), `S`
/// (stabilize), `D` (destabilize).
pub fn parse_script(text: &str) -> Result<Vec<Move>, String> {
    let mut moves = Vec::new();
    for token in text.split_whitespace() {
        moves.push(parse_token(token)?);
    }
    Ok(moves)
}

fn parse_token(token: &str) -> Result<Move, String> {
    let bad = || format!("unrecognized move token `{}`", token);
    match token {
        "S" => return Ok(Move::Stabilize),
        "D" => return Ok(Move::Destabilize),
        _ => {}
    }
    if let Some(rest) = token.strip_prefix('H') {
        let (digits, backward) = match rest.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let position: usize = digits.parse().map_err(|_| bad())?;
        if position == 0 {
            return Err(bad());
        }
        return Ok(if backward {
            Move::HurwitzBackward(position)
        } else {
            Move::HurwitzForward(position)
        });
    }
    if let Some(rest) = token.strip_prefix('C') {
        let letter: i32 = rest.parse().map_err(|_| bad())?;
        if letter == 0 {
            return Err(bad());
        }
        return Ok(Move::Conjugate(letter));
    }
    Err(bad())
}

pub fn format_script(moves: &[Move]) -> String {
    moves
        .iter()
        .map(Move::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
