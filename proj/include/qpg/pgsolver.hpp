/*
 * Copyright 2026 The qpg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <qpg/game.hpp>

namespace qpg {

/**
 * Error raised by the PGSolver reader. The message is prefixed with
 * "line L, column C: ".
 */
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct ParsedGame
{
    GameGraph game;
    /// Declared id of every vertex, indexed by the remapped id.
    std::vector<std::uint64_t> ids;
};

/**
 * Read a game in PGSolver format:
 *
 *     parity <max-id>;
 *     <id> <priority> <owner> <succ>,<succ>,... "<name>";
 *
 * The header is optional, owner 0 is Even and 1 is Odd, names are optional and
 * ignored, and "--" starts a comment running to the end of the line. Vertices
 * are renumbered 0..n-1 in declaration order and priorities are normalized
 * with normalize_priorities().
 */
ParsedGame parse_pgsolver_with_ids(std::string_view text);

GameGraph parse_pgsolver(std::string_view text);

/// Header line, then one record per vertex in id order, without names.
std::string serialize_pgsolver(const GameGraph& g);

} // namespace qpg
