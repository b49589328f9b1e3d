#include "pdakit/caching.hpp"

#include "pdakit/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <random>

namespace pdakit {

namespace {

void xor_into(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::string num(std::size_t v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------

FileLibrary::FileLibrary(const std::vector<Bytes>& files, std::size_t packets)
    : file_count_(files.size()), packets_(packets) {
    if (files.empty()) throw PreconditionError("file library needs at least one file");
    if (packets == 0) throw PreconditionError("packet count must be positive");
    file_length_ = files.front().size();
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (files[i].size() != file_length_) {
            throw PreconditionError("file " + num(i) + " has length " + num(files[i].size()) +
                                    ", expected " + num(file_length_));
        }
    }
    packet_length_ = (file_length_ + packets - 1) / packets;
    data_.assign(file_count_ * padded_length(), 0);
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::copy(files[i].begin(), files[i].end(), data_.begin() + i * padded_length());
    }
}

FileLibrary FileLibrary::random(std::size_t file_count, std::size_t file_length,
                                std::size_t packets, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Bytes> files(file_count, Bytes(file_length));
    for (auto& f : files) {
        for (auto& byte : f) byte = static_cast<std::uint8_t>(rng() & 0xFFU);
    }
    return FileLibrary(files, packets);
}

std::span<const std::uint8_t> FileLibrary::packet(std::size_t file, std::size_t j) const {
    return std::span<const std::uint8_t>(data_).subspan(file * padded_length() + j * packet_length_,
                                                        packet_length_);
}

Bytes FileLibrary::file(std::size_t i) const {
    const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(i * padded_length());
    return Bytes(begin, begin + static_cast<std::ptrdiff_t>(file_length_));
}

// ---------------------------------------------------------------------------

UserCache::UserCache(std::size_t user, std::size_t file_count, std::size_t packet_length,
                     std::vector<std::size_t> cached_rows, std::size_t total_rows)
    : user_(user),
      file_count_(file_count),
      packet_length_(packet_length),
      cached_rows_(std::move(cached_rows)),
      slot_of_row_(total_rows, kAbsent),
      data_(file_count * cached_rows_.size() * packet_length, 0) {
    for (std::size_t slot = 0; slot < cached_rows_.size(); ++slot) {
        slot_of_row_.at(cached_rows_[slot]) = slot;
    }
}

bool UserCache::contains(std::size_t file, std::size_t j) const {
    return file < file_count_ && j < slot_of_row_.size() && slot_of_row_[j] != kAbsent;
}

std::span<const std::uint8_t> UserCache::packet(std::size_t file, std::size_t j) const {
    if (!contains(file, j)) {
        throw DecodeError("user " + num(user_) + " does not cache packet " + num(j) + " of file " +
                          num(file));
    }
    const std::size_t offset = (file * cached_rows_.size() + slot_of_row_[j]) * packet_length_;
    return std::span<const std::uint8_t>(data_).subspan(offset, packet_length_);
}

void UserCache::store(std::size_t file, std::size_t j, std::span<const std::uint8_t> bytes) {
    if (!contains(file, j) || bytes.size() != packet_length_) {
        throw PreconditionError("cannot store packet " + num(j) + " of file " + num(file) +
                                " in cache of user " + num(user_));
    }
    const std::size_t offset = (file * cached_rows_.size() + slot_of_row_[j]) * packet_length_;
    std::copy(bytes.begin(), bytes.end(), data_.begin() + static_cast<std::ptrdiff_t>(offset));
}

// ---------------------------------------------------------------------------

void DemandVector::check(std::size_t users, std::size_t file_count) const {
    if (files.size() != users) {
        throw PreconditionError("demand vector has " + num(files.size()) + " entries for " +
                                num(users) + " users");
    }
    for (std::size_t k = 0; k < files.size(); ++k) {
        if (files[k] >= file_count) {
            throw PreconditionError("user " + num(k) + " demands file " + num(files[k]) +
                                    " but the library has " + num(file_count) + " files");
        }
    }
}

DemandVector DemandVector::identity(std::size_t users, std::size_t file_count) {
    if (file_count == 0) throw PreconditionError("file count must be positive");
    DemandVector d;
    d.files.resize(users);
    for (std::size_t k = 0; k < users; ++k) d.files[k] = k % file_count;
    return d;
}

// ---------------------------------------------------------------------------

CodedCachingScheme::CodedCachingScheme(PdaArray pda) : pda_(std::move(pda)) {
    require_valid(pda_, "coded caching scheme");
    occurrences_ = pda_.symbol_occurrences();
}

std::vector<UserCache> CodedCachingScheme::place(const FileLibrary& library) const {
    if (library.packet_count() != pda_.rows()) {
        throw PreconditionError("library is split into " + num(library.packet_count()) +
                                " packets but the PDA has F=" + num(pda_.rows()));
    }
    std::vector<UserCache> caches;
    caches.reserve(users());
    for (std::size_t k = 0; k < users(); ++k) {
        std::vector<std::size_t> rows;
        for (std::size_t j = 0; j < pda_.rows(); ++j) {
            if (pda_.at(j, k).is_star()) rows.push_back(j);
        }
        UserCache cache(k, library.file_count(), library.packet_length(), rows, pda_.rows());
        for (std::size_t i = 0; i < library.file_count(); ++i) {
            for (const std::size_t j : rows) cache.store(i, j, library.packet(i, j));
        }
        caches.push_back(std::move(cache));
    }
    return caches;
}

SignalSet CodedCachingScheme::deliver(const FileLibrary& library,
                                      const DemandVector& demands) const {
    demands.check(users(), library.file_count());
    if (library.packet_count() != pda_.rows()) {
        throw PreconditionError("library packet count does not match the PDA");
    }
    SignalSet out{library.packet_length(), library.file_length(), {}};
    out.signals.assign(occurrences_.size(), Bytes(library.packet_length(), 0));
    for (std::size_t s = 0; s < occurrences_.size(); ++s) {
        for (const Cell& c : occurrences_[s]) {
            xor_into(out.signals[s], library.packet(demands.files[c.col], c.row));
        }
    }
    return out;
}

Bytes CodedCachingScheme::decode(std::size_t user, const UserCache& cache,
                                 const SignalSet& signals, const DemandVector& demands) const {
    if (user >= users()) throw PreconditionError("no user " + num(user));
    if (cache.user() != user) {
        throw PreconditionError("cache of user " + num(cache.user()) + " given for user " +
                                num(user));
    }
    if (demands.files.size() != users()) throw PreconditionError("demand vector size mismatch");
    if (signals.signals.size() != occurrences_.size()) {
        throw DecodeError("expected " + num(occurrences_.size()) + " signals, got " +
                          num(signals.signals.size()));
    }
    const std::size_t plen = signals.packet_length;
    const std::size_t wanted = demands.files[user];
    Bytes out(plen * pda_.rows(), 0);
    for (std::size_t j = 0; j < pda_.rows(); ++j) {
        std::span<std::uint8_t> dst(out.data() + j * plen, plen);
        const Entry e = pda_.at(j, user);
        if (e.is_star()) {
            const auto src = cache.packet(wanted, j);
            std::copy(src.begin(), src.end(), dst.begin());
            continue;
        }
        const auto& signal = signals.signals[e.value()];
        if (signal.size() != plen) throw DecodeError("signal has wrong length");
        std::copy(signal.begin(), signal.end(), dst.begin());
        // Every other term of this signal sits on a star of this user's column.
        for (const Cell& c : occurrences_[e.value()]) {
            if (c.row == j && c.col == user) continue;
            xor_into(dst, cache.packet(demands.files[c.col], c.row));
        }
    }
    if (signals.file_length > out.size()) throw DecodeError("file length exceeds packet payload");
    out.resize(signals.file_length);
    return out;
}

std::vector<UserCache> place(const PdaArray& pda, const FileLibrary& library) {
    return CodedCachingScheme(pda).place(library);
}

SignalSet deliver(const PdaArray& pda, const FileLibrary& library, const DemandVector& demands) {
    return CodedCachingScheme(pda).deliver(library, demands);
}

Bytes decode(const PdaArray& pda, std::size_t user, const UserCache& cache,
             const SignalSet& signals, const DemandVector& demands) {
    return CodedCachingScheme(pda).decode(user, cache, signals, demands);
}

// ---------------------------------------------------------------------------

bool SchemeReport::all_ok() const noexcept {
    return std::all_of(users.begin(), users.end(), [](const UserOutcome& u) { return u.ok; });
}

std::string SchemeReport::to_text() const {
    std::string out;
    for (const auto& u : users) out += "user" + num(u.user) + (u.ok ? " OK\n" : " FAIL\n");
    out += "rate=" + num(rate_numerator) + "/" + num(rate_denominator) +
           " bytes=" + num(bytes_sent) + "\n";
    return out;
}

std::string SchemeReport::to_json_lines() const {
    std::string out;
    for (const auto& u : users) {
        nlohmann::ordered_json line;
        line["user"] = u.user;
        line["ok"] = u.ok;
        line["rate_num"] = rate_numerator;
        line["rate_den"] = rate_denominator;
        line["bytes_sent"] = bytes_sent;
        out += line.dump() + "\n";
    }
    return out;
}

SchemeReport run_scheme(const CodedCachingScheme& scheme, const FileLibrary& library,
                        const std::vector<UserCache>& caches, const DemandVector& demands) {
    const auto signals = scheme.deliver(library, demands);
    const PdaArray& pda = scheme.pda();

    SchemeReport report;
    report.rate_numerator = pda.claimed_s();
    report.rate_denominator = pda.rows();
    report.rate = pda.params().rate();
    report.cache_ratio = pda.params().memory_ratio();
    report.bytes_sent = signals.byte_count();
    report.file_length = library.file_length();
    report.packet_length = library.packet_length();
    report.cached_bytes_per_user = caches.empty() ? 0 : caches.front().byte_count();
    for (std::size_t k = 0; k < scheme.users(); ++k) {
        bool ok = false;
        try {
            ok = scheme.decode(k, caches.at(k), signals, demands) ==
                 library.file(demands.files[k]);
        } catch (const DecodeError&) {
            ok = false;
        }
        report.users.push_back({k, ok});
    }
    return report;
}

SchemeReport run_scheme(const PdaArray& pda, std::size_t file_count, const DemandVector& demands,
                        std::size_t file_length, std::uint64_t seed) {
    CodedCachingScheme scheme(pda);
    demands.check(scheme.users(), file_count);
    const auto library = FileLibrary::random(file_count, file_length, pda.rows(), seed);
    const auto caches = scheme.place(library);
    return run_scheme(scheme, library, caches, demands);
}

}  // namespace pdakit
