#pragma once

#include "relubound/common.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace relubound {

/// Dense row-major matrix over an exact scalar (BigInt or Rational).
/// Indices are 0-based; the 1-based convention of the math appears only in comments.
template <typename T>
class Matrix
{
public:
    Matrix() = default;

    Matrix( std::size_t rows, std::size_t cols )
        : _rows( rows )
        , _cols( cols )
        , _data( rows * cols, T( 0 ) )
    {
    }

    Matrix( std::initializer_list<std::initializer_list<long>> rows )
    {
        _rows = rows.size();
        _cols = _rows == 0 ? 0 : rows.begin()->size();
        _data.reserve( _rows * _cols );
        for ( const auto &row : rows )
        {
            if ( row.size() != _cols )
                throw Error( "ragged matrix literal" );
            for ( long v : row )
                _data.emplace_back( v );
        }
    }

    static Matrix identity( std::size_t n )
    {
        Matrix m( n, n );
        for ( std::size_t i = 0; i < n; ++i )
            m( i, i ) = 1;
        return m;
    }

    std::size_t rows() const { return _rows; }
    std::size_t cols() const { return _cols; }

    T &operator()( std::size_t i, std::size_t j )
    {
        assert( i < _rows && j < _cols );
        return _data[i * _cols + j];
    }

    const T &operator()( std::size_t i, std::size_t j ) const
    {
        assert( i < _rows && j < _cols );
        return _data[i * _cols + j];
    }

    std::vector<T> column( std::size_t j ) const
    {
        std::vector<T> out;
        out.reserve( _rows );
        for ( std::size_t i = 0; i < _rows; ++i )
            out.push_back( ( *this )( i, j ) );
        return out;
    }

    bool is_upper_triangular() const
    {
        for ( std::size_t i = 0; i < _rows; ++i )
            for ( std::size_t j = 0; j < std::min( i, _cols ); ++j )
                if ( ( *this )( i, j ) != 0 )
                    return false;
        return true;
    }

    friend bool operator==( const Matrix &a, const Matrix &b )
    {
        return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    friend Matrix operator*( const Matrix &a, const Matrix &b )
    {
        if ( a._cols != b._rows )
            throw Error( "matrix dimension mismatch in product" );
        Matrix c( a._rows, b._cols );
        for ( std::size_t i = 0; i < a._rows; ++i )
            for ( std::size_t k = 0; k < a._cols; ++k )
            {
                const T &aik = a( i, k );
                if ( aik == 0 )
                    continue;
                for ( std::size_t j = 0; j < b._cols; ++j )
                    c( i, j ) += aik * b( k, j );
            }
        return c;
    }

    std::vector<T> apply( const std::vector<T> &x ) const
    {
        if ( x.size() != _cols )
            throw Error( "matrix-vector dimension mismatch" );
        std::vector<T> y( _rows, T( 0 ) );
        for ( std::size_t i = 0; i < _rows; ++i )
            for ( std::size_t j = 0; j < _cols; ++j )
                if ( x[j] != 0 )
                    y[i] += ( *this )( i, j ) * x[j];
        return y;
    }

    /// Aligned grid, one row per line, entries right-justified.
    std::string to_string() const
    {
        std::vector<std::string> cells;
        cells.reserve( _data.size() );
        std::size_t width = 1;
        for ( const auto &v : _data )
        {
            cells.push_back( v.get_str( 10 ) );
            width = std::max( width, cells.back().size() );
        }
        std::ostringstream out;
        for ( std::size_t i = 0; i < _rows; ++i )
        {
            out << "[";
            for ( std::size_t j = 0; j < _cols; ++j )
            {
                const auto &cell = cells[i * _cols + j];
                out << ( j == 0 ? "" : " " ) << std::string( width - cell.size(), ' ' ) << cell;
            }
            out << "]\n";
        }
        return out.str();
    }

    /// Row-major nested vectors of decimal strings (JSON export helper).
    std::vector<std::vector<std::string>> to_strings() const
    {
        std::vector<std::vector<std::string>> out( _rows );
        for ( std::size_t i = 0; i < _rows; ++i )
            for ( std::size_t j = 0; j < _cols; ++j )
                out[i].push_back( ( *this )( i, j ).get_str( 10 ) );
        return out;
    }

private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    std::vector<T> _data;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

} // namespace relubound
