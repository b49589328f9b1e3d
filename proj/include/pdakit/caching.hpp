#pragma once

#include "pdakit/numeric.hpp"
#include "pdakit/pda.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pdakit {

using Bytes = std::vector<std::uint8_t>;

/// N equal-length files, each zero-padded to a multiple of F and split into F packets.
class FileLibrary {
public:
    /// Throws PreconditionError if files differ in length, the library is empty
    /// or `packets` is zero.
    FileLibrary(const std::vector<Bytes>& files, std::size_t packets);

    /// N files of `file_length` pseudorandom bytes drawn from `seed`.
    static FileLibrary random(std::size_t file_count, std::size_t file_length, std::size_t packets,
                              std::uint64_t seed);

    std::size_t file_count() const noexcept { return file_count_; }
    std::size_t packet_count() const noexcept { return packets_; }
    std::size_t file_length() const noexcept { return file_length_; }
    std::size_t padded_length() const noexcept { return packet_length_ * packets_; }
    std::size_t packet_length() const noexcept { return packet_length_; }
    std::size_t padding() const noexcept { return padded_length() - file_length_; }

    std::span<const std::uint8_t> packet(std::size_t file, std::size_t j) const;

    /// The unpadded contents of file i.
    Bytes file(std::size_t i) const;

private:
    std::size_t file_count_ = 0;
    std::size_t packets_ = 0;
    std::size_t file_length_ = 0;
    std::size_t packet_length_ = 0;
    Bytes data_;
};

/// Packets user k holds: packet j of every file exactly when p(j,k) is a star.
class UserCache {
public:
    UserCache(std::size_t user, std::size_t file_count, std::size_t packet_length,
              std::vector<std::size_t> cached_rows, std::size_t total_rows);

    std::size_t user() const noexcept { return user_; }
    bool contains(std::size_t file, std::size_t j) const;

    /// Throws DecodeError when (file, j) is not cached.
    std::span<const std::uint8_t> packet(std::size_t file, std::size_t j) const;

    void store(std::size_t file, std::size_t j, std::span<const std::uint8_t> bytes);

    /// Number of (file, packet) pairs held, N * Z for a valid placement.
    std::size_t packet_count() const noexcept { return file_count_ * cached_rows_.size(); }
    std::size_t byte_count() const noexcept { return data_.size(); }
    std::span<const std::size_t> cached_rows() const noexcept { return cached_rows_; }

private:
    static constexpr std::size_t kAbsent = ~std::size_t{0};

    std::size_t user_ = 0;
    std::size_t file_count_ = 0;
    std::size_t packet_length_ = 0;
    std::vector<std::size_t> cached_rows_;
    std::vector<std::size_t> slot_of_row_;
    Bytes data_;
};

/// d_k for every user; repetitions allowed.
struct DemandVector {
    std::vector<std::size_t> files;

    /// Throws PreconditionError unless there is one demand per user, each below N.
    void check(std::size_t users, std::size_t file_count) const;

    /// d_k = k mod N.
    static DemandVector identity(std::size_t users, std::size_t file_count);
};

/// One broadcast signal per symbol s: the XOR of packet j of file d_k over p(j,k) = s.
struct SignalSet {
    std::size_t packet_length = 0;
    /// Unpadded file length, so receivers can strip padding.
    std::size_t file_length = 0;
    std::vector<Bytes> signals;

    std::size_t byte_count() const noexcept { return signals.size() * packet_length; }
};

/// A validated PDA prepared for placement, delivery and decoding.
class CodedCachingScheme {
public:
    /// Throws InvalidPdaError if `pda` fails validation.
    explicit CodedCachingScheme(PdaArray pda);

    const PdaArray& pda() const noexcept { return pda_; }
    std::size_t users() const noexcept { return pda_.cols(); }

    std::vector<UserCache> place(const FileLibrary& library) const;
    SignalSet deliver(const FileLibrary& library, const DemandVector& demands) const;
    Bytes decode(std::size_t user, const UserCache& cache, const SignalSet& signals,
                 const DemandVector& demands) const;

private:
    PdaArray pda_;
    std::vector<std::vector<Cell>> occurrences_;
};

std::vector<UserCache> place(const PdaArray& pda, const FileLibrary& library);
SignalSet deliver(const PdaArray& pda, const FileLibrary& library, const DemandVector& demands);
Bytes decode(const PdaArray& pda, std::size_t user, const UserCache& cache,
             const SignalSet& signals, const DemandVector& demands);

struct UserOutcome {
    std::size_t user = 0;
    bool ok = false;
};

/// End-to-end run of the scheme realized by a PDA.
struct SchemeReport {
    std::vector<UserOutcome> users;
    std::size_t rate_numerator = 0;    // S
    std::size_t rate_denominator = 0;  // F
    Rational rate;
    Rational cache_ratio;
    std::size_t bytes_sent = 0;
    std::size_t file_length = 0;
    std::size_t packet_length = 0;
    std::size_t cached_bytes_per_user = 0;

    bool all_ok() const noexcept;

    /// "user0 OK" lines followed by "rate=S/F bytes=<n>".
    std::string to_text() const;

    /// One JSON object per user with user, ok, rate_num, rate_den, bytes_sent.
    std::string to_json_lines() const;
};

/// Places, delivers and decodes with pseudorandom files drawn from `seed`.
SchemeReport run_scheme(const PdaArray& pda, std::size_t file_count, const DemandVector& demands,
                        std::size_t file_length, std::uint64_t seed);

/// Runs a prepared scheme on an existing library and placement.
SchemeReport run_scheme(const CodedCachingScheme& scheme, const FileLibrary& library,
                        const std::vector<UserCache>& caches, const DemandVector& demands);

}  // namespace pdakit
