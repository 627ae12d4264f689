//! Incident timestamps in the station log text formats.
//!
//! Dates are written `mm-dd-yy` and times `hh:mm:ss:msec`. Both forms are
//! canonical: parsing a valid string and formatting the result reproduces
//! the input byte for byte. The millisecond field is two digits zero-padded
//! below 100 (`07`, `47`) and three digits otherwise (`123`); other widths
//! are rejected so the round-trip stays exact.
//!
//! The time zone is an opaque label. No offset arithmetic is performed;
//! ordering assumes a single zone per log corpus, with the zone label acting
//! only as a final tie-break between otherwise identical instants.

use std::fmt;

use chrono::{Datelike, NaiveDate, Timelike};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Century used when expanding two-digit years; `22` parses as 2022.
pub const DEFAULT_CENTURY_BASE: i32 = 2000;

/// Timestamp parse failure, with the offending detail spelled out.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed timestamp: {reason}")]
pub struct MalformedTimestamp {
    pub reason: String,
}

impl MalformedTimestamp {
    fn new(reason: impl Into<String>) -> Self {
        Self {
            reason: reason.into(),
        }
    }
}

/// A station-log instant: calendar date, opaque zone label, and
/// millisecond-resolution time of day.
///
/// Field order drives the derived ordering: date first, then time of day,
/// with the zone label as the last tie-break.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IncidentTimestamp {
    date: NaiveDate,
    hours: u8,
    minutes: u8,
    seconds: u8,
    milliseconds: u16,
    time_zone: String,
}

impl IncidentTimestamp {
    /// Builds a timestamp from already-split fields, enforcing the range
    /// invariants (hours 0-23, minutes/seconds 0-59, milliseconds 0-999).
    pub fn new(
        date: NaiveDate,
        time_zone: impl Into<String>,
        hours: u8,
        minutes: u8,
        seconds: u8,
        milliseconds: u16,
    ) -> Result<Self, MalformedTimestamp> {
        if hours > 23 {
            return Err(MalformedTimestamp::new(format!(
                "hours {hours} out of range 0-23"
            )));
        }
        if minutes > 59 {
            return Err(MalformedTimestamp::new(format!(
                "minutes {minutes} out of range 0-59"
            )));
        }
        if seconds > 59 {
            return Err(MalformedTimestamp::new(format!(
                "seconds {seconds} out of range 0-59"
            )));
        }
        if milliseconds > 999 {
            return Err(MalformedTimestamp::new(format!(
                "milliseconds {milliseconds} out of range 0-999"
            )));
        }
        let time_zone = time_zone.into();
        validate_zone_label(&time_zone)?;
        Ok(Self {
            date,
            hours,
            minutes,
            seconds,
            milliseconds,
            time_zone,
        })
    }

    /// Parses the `mm-dd-yy` / `hh:mm:ss:msec` pair, mapping two-digit years
    /// into 2000-2099.
    pub fn parse(
        date_text: &str,
        time_zone: &str,
        time_text: &str,
    ) -> Result<Self, MalformedTimestamp> {
        Self::parse_in_century(date_text, time_zone, time_text, DEFAULT_CENTURY_BASE)
    }

    /// Like [`IncidentTimestamp::parse`] but with an explicit century base
    /// for the two-digit year (e.g. 1900 maps `22` to 1922).
    pub fn parse_in_century(
        date_text: &str,
        time_zone: &str,
        time_text: &str,
        century_base: i32,
    ) -> Result<Self, MalformedTimestamp> {
        let date = parse_date(date_text, century_base)?;
        let (hours, minutes, seconds, milliseconds) = parse_time(time_text)?;
        Self::new(date, time_zone, hours, minutes, seconds, milliseconds)
    }

    pub fn date(&self) -> NaiveDate {
        self.date
    }

    pub fn time_zone(&self) -> &str {
        &self.time_zone
    }

    pub fn hours(&self) -> u8 {
        self.hours
    }

    pub fn minutes(&self) -> u8 {
        self.minutes
    }

    pub fn seconds(&self) -> u8 {
        self.seconds
    }

    pub fn milliseconds(&self) -> u16 {
        self.milliseconds
    }

    /// Renders the date as `mm-dd-yy`. Years outside the 2000-2099 window
    /// still render their last two digits.
    pub fn format_date(&self) -> String {
        format!(
            "{:02}-{:02}-{:02}",
            self.date.month(),
            self.date.day(),
            self.date.year().rem_euclid(100)
        )
    }

    /// Renders the time as `hh:mm:ss:msec` in the canonical millisecond
    /// width (two digits below 100, three otherwise).
    pub fn format_time(&self) -> String {
        format!(
            "{:02}:{:02}:{:02}:{}",
            self.hours,
            self.minutes,
            self.seconds,
            format_millis(self.milliseconds)
        )
    }

    /// Milliseconds since the Unix epoch, treating the zone label as UTC.
    /// Only meaningful for comparing instants within a single-zone corpus.
    pub fn epoch_millis(&self) -> i64 {
        let time = self
            .date
            .and_hms_milli_opt(
                u32::from(self.hours),
                u32::from(self.minutes),
                u32::from(self.seconds),
                u32::from(self.milliseconds),
            )
            .expect("fields validated at construction");
        time.and_utc().timestamp_millis()
    }

    /// Returns this instant shifted by `delta_ms` milliseconds, carrying the
    /// zone label across. Crossing midnight rolls the date.
    pub fn add_millis(&self, delta_ms: i64) -> Self {
        let shifted = self
            .date
            .and_hms_milli_opt(
                u32::from(self.hours),
                u32::from(self.minutes),
                u32::from(self.seconds),
                u32::from(self.milliseconds),
            )
            .expect("fields validated at construction")
            + chrono::Duration::milliseconds(delta_ms);
        Self {
            date: shifted.date(),
            hours: shifted.time().hour() as u8,
            minutes: shifted.time().minute() as u8,
            seconds: shifted.time().second() as u8,
            milliseconds: (shifted.time().nanosecond() / 1_000_000) as u16,
            time_zone: self.time_zone.clone(),
        }
    }
}

impl fmt::Display for IncidentTimestamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            self.format_date(),
            self.time_zone,
            self.format_time()
        )
    }
}

/// Parses a `mm-dd-yy` / `hh:mm:ss:msec` pair into an [`IncidentTimestamp`].
pub fn parse_timestamp(
    date_text: &str,
    time_zone: &str,
    time_text: &str,
) -> Result<IncidentTimestamp, MalformedTimestamp> {
    IncidentTimestamp::parse(date_text, time_zone, time_text)
}

fn parse_date(text: &str, century_base: i32) -> Result<NaiveDate, MalformedTimestamp> {
    let parts: Vec<&str> = text.split('-').collect();
    if parts.len() != 3 {
        return Err(MalformedTimestamp::new(format!(
            "date {text:?} must have three dash-separated fields (mm-dd-yy)"
        )));
    }
    let month = parse_two_digit(parts[0], "month")?;
    let day = parse_two_digit(parts[1], "day")?;
    let year_suffix = parse_two_digit(parts[2], "year")?;
    let year = century_base + i32::from(year_suffix);
    NaiveDate::from_ymd_opt(year, u32::from(month), u32::from(day)).ok_or_else(|| {
        MalformedTimestamp::new(format!("{text:?} is not a valid calendar date"))
    })
}

fn parse_time(text: &str) -> Result<(u8, u8, u8, u16), MalformedTimestamp> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 4 {
        return Err(MalformedTimestamp::new(format!(
            "time {text:?} must have four colon-separated fields (hh:mm:ss:msec)"
        )));
    }
    let hours = parse_two_digit(parts[0], "hours")?;
    let minutes = parse_two_digit(parts[1], "minutes")?;
    let seconds = parse_two_digit(parts[2], "seconds")?;
    let milliseconds = parse_millis(parts[3])?;
    Ok((hours, minutes, seconds, milliseconds))
}

fn parse_two_digit(field: &str, name: &str) -> Result<u8, MalformedTimestamp> {
    if field.len() != 2 || !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(MalformedTimestamp::new(format!(
            "{name} field {field:?} must be exactly two digits"
        )));
    }
    Ok(field.parse().expect("two ascii digits"))
}

fn parse_millis(field: &str) -> Result<u16, MalformedTimestamp> {
    if !(2..=3).contains(&field.len()) || !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(MalformedTimestamp::new(format!(
            "millisecond field {field:?} must be two or three digits"
        )));
    }
    let value: u16 = field.parse().expect("ascii digits");
    if field.len() == 3 && value < 100 {
        return Err(MalformedTimestamp::new(format!(
            "millisecond field {field:?} has a non-canonical leading zero"
        )));
    }
    Ok(value)
}

fn format_millis(value: u16) -> String {
    if value < 100 {
        format!("{value:02}")
    } else {
        format!("{value}")
    }
}

fn validate_zone_label(label: &str) -> Result<(), MalformedTimestamp> {
    if label.is_empty() {
        return Err(MalformedTimestamp::new("time zone label is empty"));
    }
    if !label
        .chars()
        .all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '_' | '/'))
    {
        return Err(MalformedTimestamp::new(format!(
            "time zone label {label:?} contains unsupported characters"
        )));
    }
    Ok(())
}

// Serialized as the three text fields so documents stay human-readable and
// deserialization re-runs the parser (invariants hold on any loaded value).
#[derive(Serialize, Deserialize)]
struct TimestampRepr {
    date: String,
    time_zone: String,
    time: String,
}

impl Serialize for IncidentTimestamp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TimestampRepr {
            date: self.format_date(),
            time_zone: self.time_zone.clone(),
            time: self.format_time(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IncidentTimestamp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TimestampRepr::deserialize(deserializer)?;
        IncidentTimestamp::parse(&repr.date, &repr.time_zone, &repr.time)
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_case_study_timestamp() {
        let ts = parse_timestamp("05-16-22", "EST", "02:20:40:47").unwrap();
        assert_eq!(ts.date(), NaiveDate::from_ymd_opt(2022, 5, 16).unwrap());
        assert_eq!(ts.time_zone(), "EST");
        assert_eq!(
            (ts.hours(), ts.minutes(), ts.seconds(), ts.milliseconds()),
            (2, 20, 40, 47)
        );
        assert_eq!(ts.format_date(), "05-16-22");
        assert_eq!(ts.format_time(), "02:20:40:47");
    }

    #[test]
    fn parses_century_epoch() {
        let ts = parse_timestamp("01-01-00", "UTC", "00:00:00:00").unwrap();
        assert_eq!(ts.date(), NaiveDate::from_ymd_opt(2000, 1, 1).unwrap());
        assert_eq!(
            (ts.hours(), ts.minutes(), ts.seconds(), ts.milliseconds()),
            (0, 0, 0, 0)
        );
    }

    #[test]
    fn rejects_out_of_range_fields() {
        assert!(parse_timestamp("13-40-22", "EST", "99:99:99:999").is_err());
        assert!(parse_timestamp("00-10-22", "EST", "01:02:03:04").is_err());
        assert!(parse_timestamp("02-30-22", "EST", "01:02:03:04").is_err());
        assert!(parse_timestamp("05-16-22", "EST", "24:00:00:00").is_err());
        assert!(parse_timestamp("05-16-22", "EST", "23:60:00:00").is_err());
        assert!(parse_timestamp("05-16-22", "EST", "23:59:60:00").is_err());
    }

    #[test]
    fn rejects_wrong_field_counts_and_non_digits() {
        assert!(parse_timestamp("05-16", "EST", "02:20:40:47").is_err());
        assert!(parse_timestamp("05-16-22-01", "EST", "02:20:40:47").is_err());
        assert!(parse_timestamp("05-16-22", "EST", "02:20:40").is_err());
        assert!(parse_timestamp("05-16-22", "EST", "02:20:40:47:00").is_err());
        assert!(parse_timestamp("AA-16-22", "EST", "02:20:40:47").is_err());
        assert!(parse_timestamp("05-16-22", "EST", "02:2O:40:47").is_err());
        assert!(parse_timestamp("5-16-22", "EST", "02:20:40:47").is_err());
    }

    #[test]
    fn rejects_non_canonical_milliseconds() {
        assert!(parse_timestamp("05-16-22", "EST", "02:20:40:047").is_err());
        assert!(parse_timestamp("05-16-22", "EST", "02:20:40:7").is_err());
        assert!(parse_timestamp("05-16-22", "EST", "02:20:40:0470").is_err());
        // Canonical widths pass.
        assert!(parse_timestamp("05-16-22", "EST", "02:20:40:07").is_ok());
        assert!(parse_timestamp("05-16-22", "EST", "02:20:40:470").is_ok());
    }

    #[test]
    fn rejects_bad_zone_labels() {
        assert!(parse_timestamp("05-16-22", "", "02:20:40:47").is_err());
        assert!(parse_timestamp("05-16-22", "E S T", "02:20:40:47").is_err());
        assert!(parse_timestamp("05-16-22", "EST|X", "02:20:40:47").is_err());
        assert!(parse_timestamp("05-16-22", "UTC+5", "02:20:40:47").is_ok());
    }

    #[test]
    fn century_base_is_configurable() {
        let ts =
            IncidentTimestamp::parse_in_century("05-16-22", "EST", "02:20:40:47", 1900).unwrap();
        assert_eq!(ts.date().year(), 1922);
        assert_eq!(ts.format_date(), "05-16-22");
    }

    #[test]
    fn leap_day_validity_follows_the_calendar() {
        assert!(parse_timestamp("02-29-24", "UTC", "00:00:00:00").is_ok());
        assert!(parse_timestamp("02-29-23", "UTC", "00:00:00:00").is_err());
    }

    #[test]
    fn ordering_is_by_instant_then_zone() {
        let a = parse_timestamp("05-16-22", "EST", "02:20:40:47").unwrap();
        let b = parse_timestamp("05-16-22", "EST", "02:20:41:00").unwrap();
        let c = parse_timestamp("05-17-22", "EST", "00:00:00:00").unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn add_millis_rolls_across_midnight() {
        let ts = parse_timestamp("05-16-22", "EST", "23:59:59:999").unwrap();
        let next = ts.add_millis(1);
        assert_eq!(next.format_date(), "05-17-22");
        assert_eq!(next.format_time(), "00:00:00:00");
        assert_eq!(next.time_zone(), "EST");
        assert_eq!(next.epoch_millis() - ts.epoch_millis(), 1);
    }

    #[test]
    fn serde_round_trips_through_text_fields() {
        let ts = parse_timestamp("05-16-22", "EST", "02:20:40:47").unwrap();
        let json = serde_json::to_string(&ts).unwrap();
        let back: IncidentTimestamp = serde_json::from_str(&json).unwrap();
        assert_eq!(ts, back);
    }
}
