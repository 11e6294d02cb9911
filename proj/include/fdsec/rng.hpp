// SPDX-License-Identifier: Apache-2.0
//
// fdsecrecy - secrecy outage analysis for jammed multi-antenna downlinks
// Copyright (C) 2026 The fdsecrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FDSEC_RNG_H
#define FDSEC_RNG_H

#include <array>
#include <cstdint>
#include <limits>

namespace fdsec
{
    // Counter-based generator (Philox 4x32, 10 rounds)
    // A stream is identified by (seed, stream id, tag); streams never overlap, so any
    // assignment of streams to threads reproduces the same numbers.
    class RngStream
    {
    public:
        using result_type = std::uint32_t;

        RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t tag = 0)
            : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
              ctr_{static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32), tag, 0u}
        {
        }

        static constexpr result_type min() { return 0; }
        static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

        result_type operator()()
        {
            if (pos_ == 4)
            {
                refill();
                pos_ = 0;
            }
            return buf_[pos_++];
        }

        // Uniform on the open interval (0,1) with 53 random bits
        double uniform()
        {
            const std::uint64_t hi = (*this)();
            const std::uint64_t lo = (*this)();
            const std::uint64_t bits = ((hi << 32) | lo) >> 11;
            return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
        }

    private:
        void refill()
        {
            std::array<std::uint32_t, 4> c = ctr_;
            std::uint32_t k0 = key_[0], k1 = key_[1];
            for (int round = 0; round < 10; ++round)
            {
                const std::uint64_t p0 = std::uint64_t(0xD2511F53u) * c[0];
                const std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * c[2];
                const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
                const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
                c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
                k0 += 0x9E3779B9u;
                k1 += 0xBB67AE85u;
            }
            buf_ = c;
            ++ctr_[3];
        }

        std::array<std::uint32_t, 2> key_;
        std::array<std::uint32_t, 4> ctr_;
        std::array<std::uint32_t, 4> buf_{};
        int pos_ = 4;
    };
}

#endif
