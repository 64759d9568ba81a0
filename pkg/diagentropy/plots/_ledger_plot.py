#  License: Apache Software License 2.0

"""Module containing the rendering of additivity ledgers."""
from typing import List, Optional

import matplotlib
import pandas as pd
import plotly.graph_objects as go

from .colors import Colors


def _data_prep_ledger_plot(data: pd.DataFrame, hover_metric_format: str) -> pd.DataFrame:
    data = data.copy()
    data['label'] = data['step'].astype(str) + '. ' + data['symptom']
    data['information_label'] = data['information'].apply(lambda x: hover_metric_format.format(x))
    data['residual_label'] = data['residual_entropy'].apply(lambda x: hover_metric_format.format(x))
    return data


def ledger_plot(
    table: pd.DataFrame,
    initial_entropy: float,
    title: str = 'Information per step',
    x_axis_title: str = 'Step',
    y_axis_title: str = 'Entropy',
    hover_metric_format: str = '{0:.4f}',
    alpha: float = 0.6,
    colors: Optional[List[str]] = None,
    figure: Optional[go.Figure] = None,
) -> go.Figure:
    """Renders the information of every ledger step as a bar hanging from the entropy before the step.

    Parameters
    ----------
    table: pd.DataFrame
        A ledger with ``step``, ``symptom``, ``conditions``, ``information`` and ``residual_entropy`` columns.
    initial_entropy: float
        The entropy before the first step.
    title: str, default='Information per step'
        The figure title.
    x_axis_title: str, default='Step'
        The title of the x-axis.
    y_axis_title: str, default='Entropy'
        The title of the y-axis.
    hover_metric_format: str, default='{0:.4f}'
        Format of the values shown when hovering.
    alpha: float, default=0.6
        Opacity of the information bars.
    colors: List[str], default=None
        Colors of the bars, the residual line and the axes.
    figure: go.Figure, default=None
        An existing figure to render into.

    Returns
    -------
    fig: plotly.graph_objects.Figure
        A ``Figure`` object containing the ledger plot.
        Can be saved to disk or shown rendered on screen using ``fig.show()``.
    """
    if colors is None:
        colors = [Colors.BLUE_SKY_CRAYOLA, Colors.INDIGO_PERSIAN, Colors.GRAY_DARK]

    data = _data_prep_ledger_plot(table, hover_metric_format)
    bar_color = 'rgba{}'.format(matplotlib.colors.to_rgba(matplotlib.colors.to_rgb(colors[0]), alpha))

    layout = go.Layout(
        title=title,
        xaxis=dict(title=x_axis_title, linecolor=colors[2], showgrid=False, mirror=True, zeroline=False),
        yaxis=dict(title=y_axis_title, linecolor=colors[2], showgrid=False, mirror=True, rangemode='tozero'),
        paper_bgcolor='rgba(255,255,255,1)',
        plot_bgcolor='rgba(255,255,255,1)',
        legend=dict(itemclick=False, itemdoubleclick=False),
        hoverlabel=dict(bgcolor="white", font_size=14),
    )

    if figure:
        fig = figure
        fig.update_layout(layout)
    else:
        fig = go.Figure(layout=layout)

    fig.add_hline(y=initial_entropy, line_dash='dash', line_color=colors[2], annotation_text='Initial entropy')
    fig.add_trace(
        go.Bar(
            name='Information',
            x=data['label'],
            y=data['information'],
            base=data['residual_entropy'],
            marker_color=bar_color,
            customdata=data[['conditions', 'information_label']],
            hovertemplate='Conditions: <b>%{customdata[0]}</b><br>Information: <b>%{customdata[1]}</b><extra></extra>',
        )
    )
    fig.add_trace(
        go.Scatter(
            name='Residual entropy',
            x=data['label'],
            y=data['residual_entropy'],
            mode='lines+markers',
            line=dict(color=colors[1], width=2, shape='hv'),
            customdata=data[['residual_label']],
            hovertemplate='Residual entropy: <b>%{customdata[0]}</b><extra></extra>',
        )
    )
    return fig
