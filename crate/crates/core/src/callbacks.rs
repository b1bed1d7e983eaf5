//! The two built-in callbacks: a name server and a calculation server.

use std::collections::BTreeMap;

use crate::monad::Response;
use crate::server::{CallbackInstance, ServerState, Value};

type HandlerResult = Result<Response<Value, ServerState>, String>;

/// A name server that remembers the locations of things.
pub fn name_server() -> CallbackInstance {
    CallbackInstance::new("nameServer", ServerState::Map(BTreeMap::new()))
        .with_handler("add()place()state", add_place)
        .with_handler("whereIs()state", where_is)
}

fn add_place(args: &[Value], state: &ServerState) -> HandlerResult {
    let ServerState::Map(map) = state else {
        return Err("TypeError: name server state must be a map".to_string());
    };
    let [name, place] = args else {
        return Err("TypeError: add()place() expects a name and a place".to_string());
    };
    let mut updated = map.clone();
    updated.insert(name.to_string(), place.clone());
    Ok(Response::new(place.clone(), ServerState::Map(updated)))
}

fn where_is(args: &[Value], state: &ServerState) -> HandlerResult {
    let ServerState::Map(map) = state else {
        return Err("TypeError: name server state must be a map".to_string());
    };
    let [name] = args else {
        return Err("TypeError: whereIs expects a name".to_string());
    };
    let key = name.to_string();
    match map.get(&key) {
        Some(place) => Ok(Response::new(place.clone(), state.clone())),
        None => Err(format!("KeyNotFound: {key}")),
    }
}

/// A one-function calculator with a memory.
pub fn calculator() -> CallbackInstance {
    CallbackInstance::new("calculator", ServerState::Number(0.0))
        .with_handler("clearstate", clear)
        .with_handler("add()state", add)
}

fn clear(_args: &[Value], _state: &ServerState) -> HandlerResult {
    Ok(Response::new(Value::num(0.0), ServerState::Number(0.0)))
}

fn add(args: &[Value], state: &ServerState) -> HandlerResult {
    let ServerState::Number(memory) = state else {
        return Err("TypeError: calculator state must be a number".to_string());
    };
    let value = match args {
        [v] => v.as_num().ok_or("TypeError: add expects a number")?,
        _ => return Err("TypeError: add expects a number".to_string()),
    };
    let total = memory + value;
    Ok(Response::new(Value::num(total), ServerState::Number(total)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(entries: &[(&str, &str)]) -> ServerState {
        ServerState::Map(
            entries
                .iter()
                .map(|(k, v)| (k.to_string(), Value::text(*v)))
                .collect(),
        )
    }

    #[test]
    fn add_place_stores_and_answers_the_place() {
        let args = [Value::text("BuckinghamPalace"), Value::text("London")];
        let response = add_place(&args, &map(&[])).unwrap();
        assert_eq!(response.result, Value::text("London"));
        assert_eq!(response.state, map(&[("BuckinghamPalace", "London")]));
    }

    #[test]
    fn add_place_overwrites_an_existing_name() {
        let args = [Value::text("EiffelTower"), Value::text("Vegas")];
        let response = add_place(&args, &map(&[("EiffelTower", "Paris")])).unwrap();
        assert_eq!(response.state, map(&[("EiffelTower", "Vegas")]));
    }

    #[test]
    fn where_is_answers_without_changing_the_map() {
        let state = map(&[("EiffelTower", "Paris")]);
        let response = where_is(&[Value::text("EiffelTower")], &state).unwrap();
        assert_eq!(response.result, Value::text("Paris"));
        assert_eq!(response.state, state);
    }

    #[test]
    fn where_is_reports_missing_names() {
        let err = where_is(&[Value::text("Atlantis")], &map(&[])).unwrap_err();
        assert_eq!(err, "KeyNotFound: Atlantis");
    }

    #[test]
    fn calculator_accumulates_and_clears() {
        let first = add(&[Value::num(3.0)], &ServerState::Number(0.0)).unwrap();
        assert_eq!(first.result, Value::num(3.0));
        assert_eq!(first.state, ServerState::Number(3.0));

        let second = add(&[Value::num(4.0)], &ServerState::Number(3.0)).unwrap();
        assert_eq!(second.result, Value::num(7.0));
        assert_eq!(second.state, ServerState::Number(7.0));

        let cleared = clear(&[], &ServerState::Number(99.0)).unwrap();
        assert_eq!(cleared.result, Value::num(0.0));
        assert_eq!(cleared.state, ServerState::Number(0.0));
    }

    #[test]
    fn calculator_rejects_non_numbers() {
        let err = add(&[Value::text("three")], &ServerState::Number(0.0)).unwrap_err();
        assert_eq!(err, "TypeError: add expects a number");
    }
}
