use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Duration;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

use crate::users::{random_hex, Role};

pub const DEFAULT_SESSION_TTL: Duration = Duration::from_secs(8 * 3600);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Session {
    /// 256 random bits, hex.
    pub token: String,
    pub username: String,
    pub role: Role,
    pub expires_at: DateTime<Utc>,
}

pub struct SessionStore {
    ttl: Duration,
    sessions: Mutex<HashMap<String, Session>>,
}

impl SessionStore {
    pub fn new(ttl: Duration) -> Self {
        SessionStore { ttl, sessions: Mutex::new(HashMap::new()) }
    }

    pub fn issue(&self, username: &str, role: Role) -> Session {
        let ttl = chrono::Duration::from_std(self.ttl).unwrap_or(chrono::Duration::MAX);
        let session = Session {
            token: random_hex(32),
            username: username.to_string(),
            role,
            expires_at: Utc::now().checked_add_signed(ttl).unwrap_or(DateTime::<Utc>::MAX_UTC),
        };
        let mut map = self.sessions.lock().unwrap_or_else(|p| p.into_inner());
        let now = Utc::now();
        map.retain(|_, s| s.expires_at > now);
        map.insert(session.token.clone(), session.clone());
        session
    }

    /// Live session for `token`; expired ones are dropped.
    pub fn validate(&self, token: &str) -> Option<Session> {
        let mut map = self.sessions.lock().unwrap_or_else(|p| p.into_inner());
        match map.get(token) {
            Some(s) if s.expires_at > Utc::now() => Some(s.clone()),
            Some(_) => {
                map.remove(token);
                None
            }
            None => None,
        }
    }

    pub fn revoke(&self, token: &str) {
        self.sessions.lock().unwrap_or_else(|p| p.into_inner()).remove(token);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_are_long_and_distinct() {
        let store = SessionStore::new(DEFAULT_SESSION_TTL);
        let a = store.issue("u", Role::User);
        let b = store.issue("u", Role::User);
        assert_eq!(a.token.len(), 64);
        assert_ne!(a.token, b.token);
        assert_eq!(store.validate(&a.token).unwrap().username, "u");
    }

    #[test]
    fn zero_ttl_expires_immediately() {
        let store = SessionStore::new(Duration::ZERO);
        let s = store.issue("u", Role::Admin);
        assert!(store.validate(&s.token).is_none());
    }
}
